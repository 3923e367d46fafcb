#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibhom/errors.hpp"
#include "leibhom/matrix.hpp"
#include "leibhom/tensor.hpp"

namespace leibhom {

/// Sparse coordinate vector: basis index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Scalar>;

/// An element of an algebra in basis coordinates.
struct Element {
    std::vector<Scalar> coords;

    static Element zero(std::size_t dim) { return {std::vector<Scalar>(dim)}; }
    static Element basis(std::size_t dim, std::size_t i);

    [[nodiscard]] bool is_zero() const;
    friend bool operator==(const Element &, const Element &) = default;
};

/// Finite-dimensional algebra given by structure constants
/// {b_i, b_j} = sum_k c_ij^k b_k. Absent pairs bracket to zero.
///
/// Nothing here forces the Leibniz identity; run validate() before feeding
/// an algebra to the homology code.
class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;
    /// Throws InputError on duplicate or empty basis names, or a weight
    /// list of the wrong length or containing zero.
    LeibnizAlgebra(std::string name, std::vector<std::string> basis,
                   std::optional<std::vector<unsigned>> weights = std::nullopt);

    [[nodiscard]] const std::string &name() const { return name_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
    [[nodiscard]] const std::vector<std::string> &basis_names() const { return basis_; }
    [[nodiscard]] const std::optional<std::vector<unsigned>> &weights() const { return weights_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string &basis_name) const;

    /// Sets {b_i, b_j}; zero entries are dropped. Throws InputError for an
    /// index out of range.
    void set_bracket(std::size_t i, std::size_t j, const SparseVector &value);
    [[nodiscard]] const SparseVector &structure(std::size_t i, std::size_t j) const
    {
        return structure_[i * basis_.size() + j];
    }
    void set_name(std::string name) { name_ = std::move(name); }

    friend bool operator==(const LeibnizAlgebra &, const LeibnizAlgebra &) = default;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::optional<std::vector<unsigned>> weights_;
    std::vector<SparseVector> structure_;
};

/// One failure of the Leibniz identity on a basis triple.
struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    /// {b_i,{b_j,b_k}} - {{b_i,b_j},b_k} + {{b_i,b_k},b_j}
    Element residual;
};

/// Checks {x,{y,z}} = {{x,y},z} - {{x,z},y} on all basis triples. Throws
/// InputError first if declared weights are inconsistent with the brackets.
std::vector<Violation> validate(const LeibnizAlgebra &a);

Element bracket(const LeibnizAlgebra &a, const Element &u, const Element &v);
SparseVector bracket(const LeibnizAlgebra &a, const SparseVector &u, const SparseVector &v);

/// Matrix of v -> {v, g} (right multiplication by g).
RationalMatrix right_multiplication(const LeibnizAlgebra &a, const Element &g);
/// Matrix of v -> {x, v} (left multiplication by x).
RationalMatrix left_multiplication(const LeibnizAlgebra &a, const Element &x);

struct Liezation {
    LeibnizAlgebra quotient;
    /// dim(quotient) x dim(a) projection onto the quotient basis.
    RationalMatrix projection;
};

/// Quotient by span{{x,y}+{y,x}}. The quotient basis consists of the classes
/// of the basis elements that are not pivots of the relation space. Throws
/// CheckFailure if the relation space is not a two-sided ideal or the
/// quotient bracket is not antisymmetric.
Liezation liezation(const LeibnizAlgebra &a);

/// Diagonal right action {x_1...x_n, g} = sum_i x_1...{x_i,g}...x_n on h^{⊗n}.
TensorElement glie_action(const LeibnizAlgebra &a, const TensorElement &t, const Element &g);

/// Free Leibniz algebra on `generators` letters truncated above weight
/// `max_weight`. Basis: words of length 1..max_weight ordered by length then
/// lexicographically; weight = length. Throws ResourceLimitError when the
/// basis would exceed limits.max_basis.
LeibnizAlgebra free_leibniz(std::size_t generators, unsigned max_weight, const Limits &limits = {});

/// Catalog: abelian-<d>, A2, lie-nonabelian2, sl2, heisenberg, hemisemidirect3,
/// cyclic3, A2-lie2-sum. Throws InputError listing the catalog for unknown
/// names.
LeibnizAlgebra builtin(const std::string &name);
std::vector<std::string> builtin_catalog();

} // namespace leibhom
