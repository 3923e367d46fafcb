#pragma once

#include <map>
#include <string>
#include <vector>

#include "leibhom/leibniz.hpp"

namespace leibhom {

/// Bijection of {0..n-1} in one-line notation: images[k] = σ(k).
/// Composition is (σ∘τ)(k) = σ(τ(k)).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument if `images` is not a bijection.
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    [[nodiscard]] std::size_t size() const { return images_.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t k) const { return images_[k]; }
    [[nodiscard]] const std::vector<std::size_t> &images() const { return images_; }
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] int sign() const;

    friend Permutation operator*(const Permutation &s, const Permutation &t);
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<std::size_t> images_;
};

/// |{k : σ(k) > σ(k+1)}|
std::size_t descent_count(const Permutation &p);

/// Rational combination of permutations of a fixed degree.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(std::size_t n = 0) : n_(n) {}
    static GroupAlgebraElement identity(std::size_t n);

    [[nodiscard]] std::size_t degree() const { return n_; }
    [[nodiscard]] const std::map<Permutation, Scalar> &terms() const { return terms_; }
    void add(const Permutation &p, const Scalar &c);

    GroupAlgebraElement &operator+=(const GroupAlgebraElement &rhs);
    GroupAlgebraElement &operator*=(const Scalar &s);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement &a, const GroupAlgebraElement &b);
    friend bool operator==(const GroupAlgebraElement &, const GroupAlgebraElement &) = default;

private:
    std::size_t n_;
    std::map<Permutation, Scalar> terms_;
};

/// e_n^(1) = Σ_σ (-1)^{d(σ)} / (n · C(n-1, d(σ))) σ, d = descent count.
GroupAlgebraElement euler_first(std::size_t n);

/// e_n^(i) = (1/i!) Σ over compositions (p_1..p_i) of n of
/// (Σ shuffles of type (p_1..p_i)) ∘ (e_{p_1}^(1) × ... × e_{p_i}^(1)).
/// Memoized; throws std::invalid_argument unless 1 <= i <= n.
GroupAlgebraElement euler_idempotent(std::size_t n, std::size_t i);

/// Outcome of checking that a family e^(1..n) is complete and orthogonal.
struct Certification {
    bool complete = false;
    bool orthogonal = false;
    [[nodiscard]] bool ok() const { return complete && orthogonal; }
};

Certification certify(const std::vector<GroupAlgebraElement> &family);

enum class ActionConvention { Unsigned, Signed };

std::string to_string(ActionConvention c);

/// Place-permutation action on V^{⊗n}: σ·(v_1...v_n) = v_{σ^{-1}(1)}...v_{σ^{-1}(n)},
/// multiplied by sgn(σ) in the signed convention. Throws ResourceLimitError
/// when dim_v^n exceeds the column cap.
RationalMatrix action_matrix(const GroupAlgebraElement &e, std::size_t dim_v, ActionConvention convention,
                             const Limits &limits = {});

struct Conjecture2Verdict {
    std::size_t i = 0;
    /// dim of the image of e_n^(i)
    std::size_t image_dim = 0;
    /// dim of e_{n-1}^(1) ⊕ ... ⊕ e_{n-1}^(min(i, n-1))
    std::size_t target_dim = 0;
    bool contained = false;
};

/// For i = 1..n: is d(Im e_n^(i)) inside Σ_{j<=i} Im e_{n-1}^(j)? Uses the
/// given families (index k holds e_m^(k+1)) after certifying both; throws
/// CheckFailure if certification fails.
std::vector<Conjecture2Verdict> conjecture2_check(const LeibnizAlgebra &a, std::size_t n, ActionConvention convention,
                                                  const std::vector<GroupAlgebraElement> &family_n,
                                                  const std::vector<GroupAlgebraElement> &family_below,
                                                  const Limits &limits = {});

/// Same with the built-in Eulerian families.
std::vector<Conjecture2Verdict> conjecture2_check(const LeibnizAlgebra &a, std::size_t n, ActionConvention convention,
                                                  const Limits &limits = {});

std::vector<GroupAlgebraElement> eulerian_family(std::size_t n);

} // namespace leibhom
