#pragma once

#include <map>
#include <utility>

#include "leibhom/tensor.hpp"

namespace leibhom {

/// Element of T(V) ⊗ T(V) with V in degree 1. Terms may mix degrees.
class TwoSidedTensor {
public:
    using Key = std::pair<TensorWord, TensorWord>;
    using Terms = std::map<Key, Scalar>;

    [[nodiscard]] const Terms &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    void add(const TensorWord &left, const TensorWord &right, const Scalar &coeff);

    TwoSidedTensor &operator+=(const TwoSidedTensor &rhs);
    friend bool operator==(const TwoSidedTensor &, const TwoSidedTensor &) = default;

private:
    Terms terms_;
};

/// (a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd.
TwoSidedTensor operator*(const TwoSidedTensor &x, const TwoSidedTensor &y);

/// t⊗1 + ... : the pure tensor a⊗b of two homogeneous elements.
TwoSidedTensor tensor_product(const TensorElement &a, const TensorElement &b);

/// Unshuffle coproduct: Δ(v_1...v_n) = Σ_S ±(v_S)⊗(v_{S^c}), the sign being
/// that of the permutation listing S then its complement.
TwoSidedTensor coproduct(const TensorElement &t);

/// Concatenation T(V)⊗T(V) -> T(V). Every term must have the same total
/// degree; an empty input gives the zero element of degree 0.
TensorElement mu(const TwoSidedTensor &t);

/// p_D(v_1...v_n) = [v_1,[v_2,...,[v_{n-1}, D v_n]...]]; zero in degree 0.
TensorElement p_d(const RationalMatrix &d, const TensorElement &t);

/// μ∘(p_D⊗Id)∘Δ(t) == D_n(t).
bool wigner_check(const RationalMatrix &d, const TensorElement &t);

/// p_D(i(ω)) == D_n(i(ω)) for ω given in coordinates of `basis`.
bool friedrichs_check(const RationalMatrix &d, const LieBasis &basis, std::span<const Scalar> coords);

} // namespace leibhom
