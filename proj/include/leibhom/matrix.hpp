#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibhom/scalar.hpp"

namespace leibhom {

/// Dense row-major matrix over the rationals. Zero-sized dimensions are legal.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    /// Rows given as nested lists; every row must have the same length.
    static RationalMatrix from_rows(const std::vector<std::vector<Scalar>> &rows);
    /// Columns given as vectors of length `rows`.
    static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>> &cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::vector<Scalar> column(std::size_t c) const;

    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    /// Number of nonzero entries.
    [[nodiscard]] std::size_t nonzeros() const;

    RationalMatrix &operator*=(const Scalar &s);

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Matrix product; skips zero entries, so sparse operands are cheap.
/// Throws std::invalid_argument on shape mismatch.
RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b);
std::vector<Scalar> operator*(const RationalMatrix &a, std::span<const Scalar> v);

/// Horizontal concatenation [a | b]; row counts must agree.
RationalMatrix hstack(const RationalMatrix &a, const RationalMatrix &b);

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivots are taken in
/// the leftmost column that has a nonzero entry at or below the current row;
/// the pivot row is the first such row.
RrefResult rref(const RationalMatrix &m);

/// Rank by forward elimination (no back substitution).
std::size_t rank(const RationalMatrix &m);

/// Columns span {v : m v = 0}; one column per free variable in increasing
/// order, with a 1 in that variable's slot.
RationalMatrix kernel_basis(const RationalMatrix &m);

/// Canonical basis of the column span: the nonzero rows of rref(m^T),
/// transposed. Equal spans give equal matrices.
RationalMatrix column_space(const RationalMatrix &m);

/// True iff span(a) is contained in span(b). Row counts must agree.
bool subspace_contained(const RationalMatrix &a, const RationalMatrix &b);

/// Canonical basis of the sum of the column spans; `ambient` fixes the row
/// count (and is required when `parts` is empty).
RationalMatrix subspace_sum(std::span<const RationalMatrix> parts, std::size_t ambient);

} // namespace leibhom
