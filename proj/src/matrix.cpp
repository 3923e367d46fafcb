#include "leibhom/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace leibhom {

namespace {

using Row = std::vector<Scalar>;

std::vector<Row> to_rows(const RationalMatrix &m)
{
    std::vector<Row> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto src = m.row(r);
        rows[r].assign(src.begin(), src.end());
    }
    return rows;
}

std::string shape(const RationalMatrix &m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Eliminates column `col` from `target` using the normalised pivot row whose
// nonzero positions are listed in `support`.
void eliminate(Row &target, const Row &pivot, const std::vector<std::size_t> &support, std::size_t col)
{
    if (target[col].is_zero()) {
        return;
    }
    const Scalar factor = -target[col];
    for (std::size_t c : support) {
        target[c].add_product(factor, pivot[c]);
    }
}

// Shared elimination core. With `full`, rows above the pivot are cleared too.
std::vector<std::size_t> eliminate_all(std::vector<Row> &rows, std::size_t ncols, bool full)
{
    std::vector<std::size_t> pivots;
    std::size_t current = 0;
    for (std::size_t col = 0; col < ncols && current < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = current; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[current], rows[found]);
        Row &pivot = rows[current];
        const Scalar inv = Scalar(1) / pivot[col];
        std::vector<std::size_t> support;
        for (std::size_t c = col; c < ncols; ++c) {
            if (!pivot[c].is_zero()) {
                pivot[c] *= inv;
                support.push_back(c);
            }
        }
        for (std::size_t r = full ? 0 : current + 1; r < rows.size(); ++r) {
            if (r != current) {
                eliminate(rows[r], pivot, support, col);
            }
        }
        pivots.push_back(col);
        ++current;
    }
    return pivots;
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Scalar>> &rows)
{
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols) {
            throw std::invalid_argument("from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < ncols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>> &cols)
{
    RationalMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) {
            throw std::invalid_argument("from_columns: column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

std::vector<Scalar> RationalMatrix::column(std::size_t c) const
{
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).is_zero()) {
                t(c, r) = (*this)(r, c);
            }
        }
    }
    return t;
}

bool RationalMatrix::is_zero() const
{
    for (const auto &s : data_) {
        if (!s.is_zero()) {
            return false;
        }
    }
    return true;
}

std::size_t RationalMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto &s : data_) {
        n += s.is_zero() ? 0 : 1;
    }
    return n;
}

RationalMatrix &RationalMatrix::operator*=(const Scalar &s)
{
    for (auto &x : data_) {
        if (!x.is_zero()) {
            x *= s;
        }
    }
    return *this;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: shape mismatch " + shape(a) + " * " + shape(b));
    }
    // Sparse view of b's rows.
    std::vector<std::vector<std::size_t>> support(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) {
        auto row = b.row(k);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (!row[j].is_zero()) {
                support[k].push_back(j);
            }
        }
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (arow[k].is_zero()) {
                continue;
            }
            for (std::size_t j : support[k]) {
                out(i, j).add_product(arow[k], b(k, j));
            }
        }
    }
    return out;
}

RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix sum: shape mismatch " + shape(a) + " + " + shape(b));
    }
    RationalMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!b(r, c).is_zero()) {
                out(r, c) += b(r, c);
            }
        }
    }
    return out;
}

RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b)
{
    RationalMatrix nb = b;
    nb *= Scalar(-1);
    return a + nb;
}

std::vector<Scalar> operator*(const RationalMatrix &a, std::span<const Scalar> v)
{
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    }
    std::vector<Scalar> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!v[c].is_zero()) {
                out[r].add_product(row[c], v[c]);
            }
        }
    }
    return out;
}

RationalMatrix hstack(const RationalMatrix &a, const RationalMatrix &b)
{
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hstack: row count mismatch " + shape(a) + " | " + shape(b));
    }
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c);
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out(r, a.cols() + c) = b(r, c);
        }
    }
    return out;
}

RrefResult rref(const RationalMatrix &m)
{
    auto rows = to_rows(m);
    RrefResult result;
    result.pivot_cols = eliminate_all(rows, m.cols(), true);
    result.rank = result.pivot_cols.size();
    result.reduced = RationalMatrix(m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!rows[r][c].is_zero()) {
                result.reduced(r, c) = std::move(rows[r][c]);
            }
        }
    }
    return result;
}

std::size_t rank(const RationalMatrix &m)
{
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    // Eliminating along the shorter side keeps row vectors short.
    if (m.rows() > m.cols()) {
        auto rows = to_rows(m.transpose());
        return eliminate_all(rows, m.rows(), false).size();
    }
    auto rows = to_rows(m);
    return eliminate_all(rows, m.cols(), false).size();
}

RationalMatrix kernel_basis(const RationalMatrix &m)
{
    const auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols) {
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    RationalMatrix k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        k(f, j) = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            const Scalar &entry = r.reduced(i, f);
            if (!entry.is_zero()) {
                k(r.pivot_cols[i], j) = -entry;
            }
        }
    }
    return k;
}

RationalMatrix column_space(const RationalMatrix &m)
{
    const auto r = rref(m.transpose());
    RationalMatrix basis(m.rows(), r.rank);
    for (std::size_t j = 0; j < r.rank; ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            basis(i, j) = r.reduced(j, i);
        }
    }
    return basis;
}

bool subspace_contained(const RationalMatrix &a, const RationalMatrix &b)
{
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("subspace_contained: ambient dimension mismatch " + shape(a) +
                                    " vs " + shape(b));
    }
    if (a.cols() == 0) {
        return true;
    }
    return rank(b) == rank(hstack(b, a));
}

RationalMatrix subspace_sum(std::span<const RationalMatrix> parts, std::size_t ambient)
{
    RationalMatrix all(ambient, 0);
    for (const auto &p : parts) {
        if (p.rows() != ambient) {
            throw std::invalid_argument("subspace_sum: ambient dimension mismatch " + shape(p) +
                                        " in dimension " + std::to_string(ambient));
        }
        all = hstack(all, p);
    }
    return column_space(all);
}

} // namespace leibhom
