#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "leibhom/errors.hpp"
#include "leibhom/matrix.hpp"

namespace leibhom {

using Letter = std::uint32_t;

/// A word x_1 x_2 ... x_n of basis letters; every letter has degree 1, so the
/// degree of a word is its length. The empty word is the unit of T(V,1).
using TensorWord = std::vector<Letter>;

/// Homogeneous element of T(V,1)_n = V^{⊗n}: a finite combination of words
/// of length n. Zero coefficients are never stored.
class TensorElement {
public:
    using Terms = std::map<TensorWord, Scalar>;

    TensorElement() = default;
    explicit TensorElement(std::size_t degree) : degree_(degree) {}

    static TensorElement word(TensorWord w, Scalar coeff = 1);
    static TensorElement unit() { return word({}); }

    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const Terms &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Scalar coefficient(const TensorWord &w) const;

    /// Adds coeff * w. Throws std::invalid_argument if |w| != degree().
    void add(const TensorWord &w, const Scalar &coeff);

    TensorElement &operator+=(const TensorElement &rhs);
    TensorElement &operator-=(const TensorElement &rhs);
    TensorElement &operator*=(const Scalar &s);

    friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
    friend TensorElement operator*(const Scalar &s, TensorElement a) { return a *= s; }
    friend bool operator==(const TensorElement &, const TensorElement &) = default;

private:
    void check_degree(const TensorElement &rhs) const;

    std::size_t degree_ = 0;
    Terms terms_;
};

/// Concatenation product of T(V,1).
TensorElement concat(const TensorElement &a, const TensorElement &b);

/// Graded commutator [a,b] = ab - (-1)^{|a||b|} ba.
TensorElement graded_bracket(const TensorElement &a, const TensorElement &b);

/// Formal bracket expression over basis letters.
class BracketTree {
public:
    static BracketTree leaf(Letter letter);
    static BracketTree node(BracketTree left, BracketTree right);

    [[nodiscard]] bool is_leaf() const { return std::holds_alternative<Letter>(value_); }
    [[nodiscard]] Letter letter() const { return std::get<Letter>(value_); }
    [[nodiscard]] const BracketTree &left() const { return std::get<Children>(value_)->first; }
    [[nodiscard]] const BracketTree &right() const { return std::get<Children>(value_)->second; }
    [[nodiscard]] std::size_t leaves() const;

private:
    using Children = std::shared_ptr<const std::pair<BracketTree, BracketTree>>;
    explicit BracketTree(std::variant<Letter, Children> v) : value_(std::move(v)) {}

    std::variant<Letter, Children> value_;
};

/// Expands a bracket tree into tensor words. Throws InputError for a leaf
/// outside 0..dim_v-1.
TensorElement expand_bracket(const BracketTree &tree, std::size_t dim_v);

/// [x_1,[x_2,[...,[x_{n-1},x_n]...]]] expanded into words.
TensorElement nested_bracket(const TensorWord &w);

/// Linear extension of nested_bracket: the tensor-valued form of p_n.
TensorElement bracket_image(const TensorElement &t);

/// An ordered list of words of a fixed length that fixes the coordinate
/// layout of vectors in (a subspace of) V^{⊗n}. Words are in lexicographic
/// order.
class WordBasis {
public:
    /// All dim_v^n words.
    static WordBasis full(std::size_t dim_v, std::size_t n);
    /// Words of length n whose letter weights sum to `weight`.
    static WordBasis weighted(std::span<const unsigned> weights, std::size_t n, unsigned weight);

    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] std::size_t length() const { return length_; }
    [[nodiscard]] const TensorWord &operator[](std::size_t i) const { return words_[i]; }
    [[nodiscard]] const std::vector<TensorWord> &words() const { return words_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const TensorWord &w) const;

    /// Coordinates of t; throws std::invalid_argument if t uses a word
    /// outside this basis.
    [[nodiscard]] std::vector<Scalar> to_vector(const TensorElement &t) const;
    [[nodiscard]] TensorElement to_tensor(std::span<const Scalar> v) const;

private:
    std::size_t length_ = 0;
    std::vector<TensorWord> words_;
    std::map<TensorWord, std::size_t> index_;

    void build_index();
};

/// Echelon basis of L(V,1)_n (optionally restricted to one weight) inside
/// the word coordinates of `words`.
struct LieBasis {
    std::size_t dim_v = 0;
    std::size_t degree = 0;
    std::shared_ptr<const WordBasis> words;
    /// Columns are basis vectors of L(V,1)_n in word coordinates.
    RationalMatrix inclusion;
    /// pivot_rows[k] is the word at which column k has its leading 1; every
    /// other column vanishes there.
    std::vector<std::size_t> pivot_rows;

    [[nodiscard]] std::size_t dimension() const { return inclusion.cols(); }
    /// Tensor for a coordinate vector (length dimension()).
    [[nodiscard]] TensorElement embed(std::span<const Scalar> coords) const;
    [[nodiscard]] TensorElement column(std::size_t k) const;
    /// Coordinates of an element already known to lie in the span; reads
    /// the pivot entries.
    [[nodiscard]] std::vector<Scalar> coordinates(const TensorElement &t) const;
    /// True iff t lies in the column span.
    [[nodiscard]] bool contains(const TensorElement &t) const;
};

/// L(V,1)_n for dim V = dim_v. Results are cached and shared.
std::shared_ptr<const LieBasis> lie_basis(std::size_t dim_v, std::size_t n, const Limits &limits = {});

/// Weight-w part of L(V,1)_n where letter k has weight weights[k].
std::shared_ptr<const LieBasis> lie_basis_weighted(std::span<const unsigned> weights, std::size_t n,
                                                   unsigned weight, const Limits &limits = {});

/// p_n: coordinates v with inclusion * v = bracket_image(t).
std::vector<Scalar> project_p(const LieBasis &basis, const TensorElement &t);

/// Derivation extension D_n(v_1...v_n) = sum_i v_1...D(v_i)...v_n. Column j
/// of D is the image of letter j.
TensorElement extend_d(const RationalMatrix &d, const TensorElement &t);

/// D~_n(v_1...v_n) = sum_i (-1)^i D(v_i) v_1 ... (v_i omitted) ... v_n.
TensorElement d_tilde(const RationalMatrix &d, const TensorElement &t);

/// Image of a single letter under D, as a degree-1 element.
TensorElement apply_to_letter(const RationalMatrix &d, Letter letter);

} // namespace leibhom
