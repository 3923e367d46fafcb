#include "leibhom/complexes.hpp"

#include <future>
#include <string>

namespace leibhom {

namespace {

std::size_t word_count(std::size_t dim, std::size_t n, const Limits &limits, const char *what)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= dim;
        if (r > limits.max_columns) {
            throw ResourceLimitError(std::string(what) + ": " + std::to_string(dim) + "^" + std::to_string(n) +
                                     " tensor words exceed the column cap " + std::to_string(limits.max_columns) +
                                     " (raise --cap or lower the degree)");
        }
    }
    return r;
}

RationalMatrix matrix_of(const WordBasis &domain, const WordBasis &codomain,
                         const std::function<TensorElement(const TensorElement &)> &map)
{
    RationalMatrix m(codomain.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const TensorElement image = map(TensorElement::word(domain[c]));
        for (const auto &[w, coeff] : image.terms()) {
            m(*codomain.index_of(w), c) = coeff;
        }
    }
    return m;
}

} // namespace

ChainComplexData ChainComplexData::make(std::map<std::size_t, std::size_t> dims,
                                        std::map<std::size_t, RationalMatrix> boundaries)
{
    for (const auto &[n, d] : boundaries) {
        const std::size_t src = dims.contains(n) ? dims.at(n) : 0;
        const std::size_t dst = (n > 0 && dims.contains(n - 1)) ? dims.at(n - 1) : 0;
        if (d.cols() != src || d.rows() != dst) {
            throw CheckFailure("chain complex: boundary out of degree " + std::to_string(n) + " has shape " +
                               std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
        }
        if (auto next = boundaries.find(n + 1); next != boundaries.end()) {
            if (!(d * next->second).is_zero()) {
                throw CheckFailure("chain complex: d_" + std::to_string(n) + " d_" + std::to_string(n + 1) +
                                   " != 0");
            }
        }
    }
    return {std::move(dims), std::move(boundaries)};
}

HomologyReport homology(const ChainComplexData &cx, std::size_t lo, std::size_t hi, bool with_cycles)
{
    std::map<std::size_t, std::future<std::size_t>> ranks;
    for (std::size_t n = lo; n <= hi + 1; ++n) {
        if (auto it = cx.boundaries.find(n); it != cx.boundaries.end()) {
            const RationalMatrix *m = &it->second;
            ranks.emplace(n, std::async(std::launch::async, [m] { return rank(*m); }));
        }
    }
    std::map<std::size_t, std::size_t> rank_of;
    for (auto &[n, f] : ranks) {
        rank_of[n] = f.get();
    }
    auto rank_at = [&](std::size_t n) { return rank_of.contains(n) ? rank_of.at(n) : std::size_t{0}; };

    HomologyReport report;
    for (std::size_t n = lo; n <= hi; ++n) {
        HomologyRow row;
        row.degree = n;
        row.chain_dim = cx.dims.contains(n) ? cx.dims.at(n) : 0;
        row.boundary_rank = rank_at(n);
        row.kernel_dim = row.chain_dim - row.boundary_rank;
        row.homology_dim = row.kernel_dim - rank_at(n + 1);
        if (with_cycles) {
            if (auto it = cx.boundaries.find(n); it != cx.boundaries.end()) {
                row.cycles = kernel_basis(it->second);
            } else {
                row.cycles = RationalMatrix::identity(row.chain_dim);
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

TensorElement loday_boundary(const LeibnizAlgebra &a, const TensorElement &t)
{
    const std::size_t n = t.degree();
    if (n <= 1) {
        return TensorElement(0);
    }
    TensorElement out(n - 1);
    for (const auto &[w, c] : t.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                // (-1)^{j+1} with 1-based j is (-1)^j for 0-based j.
                const Scalar sign = (j % 2 == 0) ? Scalar(c) : -c;
                const SparseVector &b = a.structure(w[i], w[j]);
                if (b.empty()) {
                    continue;
                }
                TensorWord rest;
                rest.reserve(n - 1);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != j) {
                        rest.push_back(w[k]);
                    }
                }
                for (const auto &[letter, coeff] : b) {
                    rest[i] = static_cast<Letter>(letter);
                    out.add(rest, sign * coeff);
                }
            }
        }
    }
    return out;
}

TensorElement bracket_last_two(const LeibnizAlgebra &a, const TensorElement &t)
{
    const std::size_t n = t.degree();
    if (n < 2) {
        throw std::invalid_argument("bracket_last_two: need degree >= 2");
    }
    TensorElement out(n - 1);
    for (const auto &[w, c] : t.terms()) {
        TensorWord head(w.begin(), w.end() - 1);
        for (const auto &[letter, coeff] : a.structure(w[n - 2], w[n - 1])) {
            head.back() = static_cast<Letter>(letter);
            out.add(head, c * coeff);
        }
    }
    return out;
}

RationalMatrix loday_d(const LeibnizAlgebra &a, std::size_t n, const Limits &limits)
{
    if (n == 0) {
        throw std::invalid_argument("loday_d: degree must be >= 1");
    }
    word_count(a.dimension(), n, limits, "loday_d");
    if (n == 1) {
        return RationalMatrix(1, a.dimension());
    }
    const auto domain = WordBasis::full(a.dimension(), n);
    const auto codomain = WordBasis::full(a.dimension(), n - 1);
    return matrix_of(domain, codomain, [&](const TensorElement &t) { return loday_boundary(a, t); });
}

RationalMatrix f_map(const LeibnizAlgebra &a, std::size_t n, const Limits &limits)
{
    if (n == 0) {
        throw std::invalid_argument("f_map: degree must be >= 1");
    }
    word_count(a.dimension(), n + 1, limits, "f_map");
    const auto domain = WordBasis::full(a.dimension(), n + 1);
    const auto codomain = WordBasis::full(a.dimension(), n);
    return matrix_of(domain, codomain, [&](const TensorElement &t) { return bracket_last_two(a, t); });
}

ChainComplexData cl_complex(const LeibnizAlgebra &a, std::size_t top, const Limits &limits)
{
    if (top == 0) {
        throw std::invalid_argument("cl_complex: top degree must be >= 1");
    }
    std::map<std::size_t, std::size_t> dims;
    std::map<std::size_t, RationalMatrix> boundaries;
    dims[0] = 1;
    for (std::size_t n = 1; n <= top; ++n) {
        dims[n] = word_count(a.dimension(), n, limits, "cl_complex");
    }
    std::vector<std::future<RationalMatrix>> jobs;
    for (std::size_t n = 1; n <= top; ++n) {
        jobs.push_back(std::async(std::launch::async, [&a, n, &limits] { return loday_d(a, n, limits); }));
    }
    for (std::size_t n = 1; n <= top; ++n) {
        boundaries.emplace(n, jobs[n - 1].get());
    }
    return ChainComplexData::make(std::move(dims), std::move(boundaries));
}

HomologyReport hl_homology(const LeibnizAlgebra &a, std::size_t n_max, const Limits &limits, bool with_cycles)
{
    return homology(cl_complex(a, n_max + 1, limits), 0, n_max, with_cycles);
}

RationalMatrix delta_between(const LeibnizAlgebra &a, const LieBasis &source, const LieBasis &target)
{
    if (source.degree != target.degree + 1) {
        throw std::invalid_argument("delta: source degree must be target degree + 1");
    }
    RationalMatrix m(target.dimension(), source.dimension());
    for (std::size_t k = 0; k < source.dimension(); ++k) {
        const auto coords = project_p(target, bracket_last_two(a, source.column(k)));
        for (std::size_t r = 0; r < coords.size(); ++r) {
            m(r, k) = coords[r];
        }
    }
    return m;
}

RationalMatrix delta(const LeibnizAlgebra &a, std::size_t n, const Limits &limits)
{
    if (n == 0) {
        throw std::invalid_argument("delta: degree must be >= 1");
    }
    return delta_between(a, *lie_basis(a.dimension(), n + 1, limits), *lie_basis(a.dimension(), n, limits));
}

ChainComplexData li_complex(const LeibnizAlgebra &a, std::size_t top, const Limits &limits)
{
    if (top == 0) {
        throw std::invalid_argument("li_complex: top degree must be >= 1");
    }
    std::map<std::size_t, std::size_t> dims;
    std::map<std::size_t, RationalMatrix> boundaries;
    for (std::size_t n = 1; n <= top; ++n) {
        dims[n] = lie_basis(a.dimension(), n, limits)->dimension();
    }
    for (std::size_t n = 2; n <= top; ++n) {
        boundaries.emplace(n, delta(a, n - 1, limits));
    }
    return ChainComplexData::make(std::move(dims), std::move(boundaries));
}

HomologyReport li_homology(const LeibnizAlgebra &a, std::size_t n_max, const Limits &limits, bool with_cycles)
{
    return homology(li_complex(a, n_max + 1, limits), 1, n_max, with_cycles);
}

HomologyReport weight_graded_li(const LeibnizAlgebra &a, std::size_t n_max, unsigned weight, const Limits &limits)
{
    if (!a.weights()) {
        throw InputError("weight_graded_li: algebra '" + a.name() + "' has no weights");
    }
    const auto &weights = *a.weights();
    unsigned top_weight = 0;
    for (unsigned w : weights) {
        top_weight = std::max(top_weight, w);
    }
    if (weight == 0 || weight > top_weight) {
        throw InputError("weight_graded_li: weight " + std::to_string(weight) + " outside 1.." +
                         std::to_string(top_weight));
    }
    if (n_max == 0) {
        throw std::invalid_argument("weight_graded_li: degree must be >= 1");
    }
    std::map<std::size_t, std::shared_ptr<const LieBasis>> bases;
    std::map<std::size_t, std::size_t> dims;
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        bases[n] = lie_basis_weighted(weights, n, weight, limits);
        dims[n] = bases[n]->dimension();
    }
    std::map<std::size_t, RationalMatrix> boundaries;
    for (std::size_t n = 2; n <= n_max + 1; ++n) {
        boundaries.emplace(n, delta_between(a, *bases[n], *bases[n - 1]));
    }
    auto report = homology(ChainComplexData::make(std::move(dims), std::move(boundaries)), 1, n_max);
    report.weight = weight;
    return report;
}

bool commutation_check(const LeibnizAlgebra &a, std::size_t n, const Limits &limits)
{
    const auto upper = lie_basis(a.dimension(), n + 1, limits);
    const auto lower = lie_basis(a.dimension(), n, limits);
    const RationalMatrix lhs = loday_d(a, n + 1, limits) * upper->inclusion;
    RationalMatrix rhs = lower->inclusion * delta_between(a, *upper, *lower);
    if (n % 2 == 1) {
        rhs *= Scalar(-1);
    }
    return lhs == rhs;
}

bool subcomplex_closed(const LeibnizAlgebra &a, std::size_t n, const Limits &limits)
{
    if (n <= 1) {
        return true;
    }
    const auto here = lie_basis(a.dimension(), n, limits);
    const auto below = lie_basis(a.dimension(), n - 1, limits);
    return subspace_contained(loday_d(a, n, limits) * here->inclusion, below->inclusion);
}

} // namespace leibhom
