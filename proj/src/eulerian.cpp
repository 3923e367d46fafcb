#include "leibhom/eulerian.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "leibhom/complexes.hpp"

namespace leibhom {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
    std::vector<bool> hit(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || hit[v]) {
            throw std::invalid_argument("Permutation: not a bijection");
        }
        hit[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> v(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        v[images_[k]] = k;
    }
    return Permutation(std::move(v));
}

int Permutation::sign() const
{
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < images_.size(); ++a) {
        for (std::size_t b = a + 1; b < images_.size(); ++b) {
            inversions += images_[a] > images_[b] ? 1 : 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation operator*(const Permutation &s, const Permutation &t)
{
    if (s.size() != t.size()) {
        throw std::invalid_argument("Permutation: degree mismatch");
    }
    std::vector<std::size_t> v(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        v[k] = s(t(k));
    }
    return Permutation(std::move(v));
}

std::size_t descent_count(const Permutation &p)
{
    std::size_t d = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        d += p(k) > p(k + 1) ? 1 : 0;
    }
    return d;
}

GroupAlgebraElement GroupAlgebraElement::identity(std::size_t n)
{
    GroupAlgebraElement e(n);
    e.add(Permutation::identity(n), Scalar(1));
    return e;
}

void GroupAlgebraElement::add(const Permutation &p, const Scalar &c)
{
    if (p.size() != n_) {
        throw std::invalid_argument("GroupAlgebraElement: permutation of wrong degree");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

GroupAlgebraElement &GroupAlgebraElement::operator+=(const GroupAlgebraElement &rhs)
{
    for (const auto &[p, c] : rhs.terms_) {
        add(p, c);
    }
    return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator*=(const Scalar &s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[p, c] : terms_) {
        c *= s;
    }
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement &a, const GroupAlgebraElement &b)
{
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    }
    GroupAlgebraElement out(a.degree());
    for (const auto &[s, x] : a.terms()) {
        for (const auto &[t, y] : b.terms()) {
            out.add(s * t, x * y);
        }
    }
    return out;
}

namespace {

std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void compositions(std::size_t n, std::size_t parts, std::vector<std::size_t> &prefix,
                  std::vector<std::vector<std::size_t>> &out)
{
    if (parts == 1) {
        prefix.push_back(n);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= n; ++first) {
        prefix.push_back(first);
        compositions(n - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

// Permutations increasing on each consecutive block of sizes `parts`.
std::vector<Permutation> shuffles(const std::vector<std::size_t> &parts)
{
    const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    std::vector<Permutation> out;
    for (const auto &p : all_permutations(n)) {
        std::size_t start = 0;
        bool ok = true;
        for (std::size_t len : parts) {
            for (std::size_t k = start; k + 1 < start + len && ok; ++k) {
                ok = p(k) < p(k + 1);
            }
            start += len;
        }
        if (ok) {
            out.push_back(p);
        }
    }
    return out;
}

// e_{p_1} × ... × e_{p_i}: each factor acts on its own block of positions.
GroupAlgebraElement block_product(const std::vector<GroupAlgebraElement> &factors)
{
    std::size_t n = 0;
    for (const auto &f : factors) {
        n += f.degree();
    }
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> acc{{{}, Scalar(1)}};
    for (const auto &f : factors) {
        std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
        for (const auto &[prefix, x] : acc) {
            const std::size_t offset = prefix.size();
            for (const auto &[p, y] : f.terms()) {
                std::vector<std::size_t> images = prefix;
                for (std::size_t v : p.images()) {
                    images.push_back(offset + v);
                }
                next.emplace_back(std::move(images), x * y);
            }
        }
        acc = std::move(next);
    }
    GroupAlgebraElement out(n);
    for (const auto &[images, c] : acc) {
        out.add(Permutation(images), c);
    }
    return out;
}

} // namespace

GroupAlgebraElement euler_first(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("euler_first: n must be >= 1");
    }
    GroupAlgebraElement e(n);
    const auto nn = static_cast<std::int64_t>(n);
    for (const auto &p : all_permutations(n)) {
        const auto d = static_cast<std::int64_t>(descent_count(p));
        const Scalar c(d % 2 == 0 ? 1 : -1, nn * binomial(nn - 1, d));
        e.add(p, c);
    }
    return e;
}

GroupAlgebraElement euler_idempotent(std::size_t n, std::size_t i)
{
    if (i == 0 || i > n) {
        throw std::invalid_argument("euler_idempotent: need 1 <= i <= n, got i=" + std::to_string(i) +
                                    ", n=" + std::to_string(n));
    }
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, GroupAlgebraElement> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find({n, i}); it != memo.end()) {
            return it->second;
        }
    }
    GroupAlgebraElement total(n);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> prefix;
    compositions(n, i, prefix, comps);
    for (const auto &parts : comps) {
        std::vector<GroupAlgebraElement> factors;
        for (std::size_t p : parts) {
            factors.push_back(euler_first(p));
        }
        const GroupAlgebraElement block = block_product(factors);
        GroupAlgebraElement sh(n);
        for (const auto &s : shuffles(parts)) {
            sh.add(s, Scalar(1));
        }
        total += sh * block;
    }
    std::int64_t factorial = 1;
    for (std::size_t k = 2; k <= i; ++k) {
        factorial *= static_cast<std::int64_t>(k);
    }
    total *= Scalar(1, factorial);
    std::lock_guard lock(mutex);
    return memo.try_emplace({n, i}, std::move(total)).first->second;
}

std::vector<GroupAlgebraElement> eulerian_family(std::size_t n)
{
    std::vector<GroupAlgebraElement> family;
    for (std::size_t i = 1; i <= n; ++i) {
        family.push_back(euler_idempotent(n, i));
    }
    return family;
}

Certification certify(const std::vector<GroupAlgebraElement> &family)
{
    Certification c;
    if (family.empty()) {
        return c;
    }
    const std::size_t n = family.front().degree();
    GroupAlgebraElement sum(n);
    for (const auto &e : family) {
        sum += e;
    }
    c.complete = sum == GroupAlgebraElement::identity(n);
    c.orthogonal = true;
    for (std::size_t a = 0; a < family.size() && c.orthogonal; ++a) {
        for (std::size_t b = 0; b < family.size() && c.orthogonal; ++b) {
            const GroupAlgebraElement prod = family[a] * family[b];
            c.orthogonal = a == b ? prod == family[a] : prod.terms().empty();
        }
    }
    return c;
}

std::string to_string(ActionConvention c) { return c == ActionConvention::Signed ? "signed" : "unsigned"; }

RationalMatrix action_matrix(const GroupAlgebraElement &e, std::size_t dim_v, ActionConvention convention,
                             const Limits &limits)
{
    const std::size_t n = e.degree();
    if (n > limits.max_permutation_degree) {
        throw ResourceLimitError("action_matrix: degree " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(limits.max_permutation_degree));
    }
    std::size_t size = 1;
    for (std::size_t k = 0; k < n; ++k) {
        size *= dim_v;
        if (size > limits.max_columns) {
            throw ResourceLimitError("action_matrix: " + std::to_string(dim_v) + "^" + std::to_string(n) +
                                     " tensor words exceed the column cap " + std::to_string(limits.max_columns));
        }
    }
    const WordBasis words = WordBasis::full(dim_v, n);
    RationalMatrix m(words.size(), words.size());
    for (const auto &[p, c] : e.terms()) {
        const Permutation inv = p.inverse();
        const Scalar coeff = (convention == ActionConvention::Signed && p.sign() < 0) ? -c : c;
        for (std::size_t col = 0; col < words.size(); ++col) {
            const TensorWord &w = words[col];
            TensorWord u(n);
            for (std::size_t k = 0; k < n; ++k) {
                u[k] = w[inv(k)];
            }
            m(*words.index_of(u), col) += coeff;
        }
    }
    return m;
}

std::vector<Conjecture2Verdict> conjecture2_check(const LeibnizAlgebra &a, std::size_t n, ActionConvention convention,
                                                  const std::vector<GroupAlgebraElement> &family_n,
                                                  const std::vector<GroupAlgebraElement> &family_below,
                                                  const Limits &limits)
{
    if (n < 2) {
        throw std::invalid_argument("conjecture2_check: need n >= 2");
    }
    if (family_n.size() != n || family_below.size() != n - 1) {
        throw std::invalid_argument("conjecture2_check: family sizes must be n and n-1");
    }
    if (!certify(family_n).ok() || !certify(family_below).ok()) {
        throw CheckFailure("conjecture2_check: idempotent family failed certification (degree " + std::to_string(n) +
                           "); no verdicts computed");
    }
    const std::size_t dim = a.dimension();
    const RationalMatrix d = loday_d(a, n, limits);

    std::vector<RationalMatrix> below_images;
    for (const auto &e : family_below) {
        below_images.push_back(column_space(action_matrix(e, dim, convention, limits)));
    }
    const std::size_t ambient_below = d.rows();

    std::vector<Conjecture2Verdict> out;
    for (std::size_t i = 1; i <= n; ++i) {
        const RationalMatrix image = column_space(action_matrix(family_n[i - 1], dim, convention, limits));
        const std::size_t upto = std::min(i, n - 1);
        const RationalMatrix target =
            subspace_sum(std::span<const RationalMatrix>(below_images.data(), upto), ambient_below);
        Conjecture2Verdict v;
        v.i = i;
        v.image_dim = image.cols();
        v.target_dim = target.cols();
        v.contained = subspace_contained(d * image, target);
        out.push_back(v);
    }
    return out;
}

std::vector<Conjecture2Verdict> conjecture2_check(const LeibnizAlgebra &a, std::size_t n, ActionConvention convention,
                                                  const Limits &limits)
{
    return conjecture2_check(a, n, convention, eulerian_family(n), eulerian_family(n - 1), limits);
}

} // namespace leibhom
