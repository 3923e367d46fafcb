#include "leibhom/tensor.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace leibhom {

TensorElement TensorElement::word(TensorWord w, Scalar coeff)
{
    TensorElement t(w.size());
    t.add(w, coeff);
    return t;
}

Scalar TensorElement::coefficient(const TensorWord &w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void TensorElement::add(const TensorWord &w, const Scalar &coeff)
{
    if (w.size() != degree_) {
        throw std::invalid_argument("TensorElement: word of length " + std::to_string(w.size()) +
                                    " added to degree " + std::to_string(degree_));
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void TensorElement::check_degree(const TensorElement &rhs) const
{
    if (rhs.degree_ != degree_) {
        throw std::invalid_argument("TensorElement: degree mismatch " + std::to_string(degree_) +
                                    " vs " + std::to_string(rhs.degree_));
    }
}

TensorElement &TensorElement::operator+=(const TensorElement &rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        degree_ = rhs.degree_;
    }
    check_degree(rhs);
    for (const auto &[w, c] : rhs.terms_) {
        add(w, c);
    }
    return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        degree_ = rhs.degree_;
    }
    check_degree(rhs);
    for (const auto &[w, c] : rhs.terms_) {
        add(w, -c);
    }
    return *this;
}

TensorElement &TensorElement::operator*=(const Scalar &s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[w, c] : terms_) {
        c *= s;
    }
    return *this;
}

TensorElement concat(const TensorElement &a, const TensorElement &b)
{
    TensorElement out(a.degree() + b.degree());
    for (const auto &[u, x] : a.terms()) {
        for (const auto &[v, y] : b.terms()) {
            TensorWord w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, x * y);
        }
    }
    return out;
}

TensorElement graded_bracket(const TensorElement &a, const TensorElement &b)
{
    TensorElement out = concat(a, b);
    TensorElement swapped = concat(b, a);
    if ((a.degree() * b.degree()) % 2 == 1) {
        out += swapped;
    } else {
        out -= swapped;
    }
    return out;
}

BracketTree BracketTree::leaf(Letter letter) { return BracketTree(letter); }

BracketTree BracketTree::node(BracketTree left, BracketTree right)
{
    return BracketTree(std::make_shared<const std::pair<BracketTree, BracketTree>>(std::move(left),
                                                                                  std::move(right)));
}

std::size_t BracketTree::leaves() const { return is_leaf() ? 1 : left().leaves() + right().leaves(); }

TensorElement expand_bracket(const BracketTree &tree, std::size_t dim_v)
{
    if (tree.is_leaf()) {
        if (tree.letter() >= dim_v) {
            throw InputError("expand_bracket: leaf " + std::to_string(tree.letter()) +
                             " out of range for dim V = " + std::to_string(dim_v));
        }
        return TensorElement::word({tree.letter()});
    }
    return graded_bracket(expand_bracket(tree.left(), dim_v), expand_bracket(tree.right(), dim_v));
}

TensorElement nested_bracket(const TensorWord &w)
{
    if (w.empty()) {
        throw std::invalid_argument("nested_bracket: empty word");
    }
    TensorElement t = TensorElement::word({w.back()});
    for (std::size_t k = w.size() - 1; k-- > 0;) {
        t = graded_bracket(TensorElement::word({w[k]}), t);
    }
    return t;
}

TensorElement bracket_image(const TensorElement &t)
{
    TensorElement out(t.degree());
    if (t.degree() == 0) {
        return out;
    }
    for (const auto &[w, c] : t.terms()) {
        TensorElement b = nested_bracket(w);
        b *= c;
        out += b;
    }
    return out;
}

void WordBasis::build_index()
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        index_.emplace(words_[i], i);
    }
}

WordBasis WordBasis::full(std::size_t dim_v, std::size_t n)
{
    WordBasis b;
    b.length_ = n;
    if (dim_v == 0 && n > 0) {
        return b;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= dim_v;
    }
    b.words_.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        TensorWord w(n);
        std::size_t rest = idx;
        for (std::size_t pos = n; pos-- > 0;) {
            w[pos] = static_cast<Letter>(rest % dim_v);
            rest /= dim_v;
        }
        b.words_.push_back(std::move(w));
    }
    b.build_index();
    return b;
}

WordBasis WordBasis::weighted(std::span<const unsigned> weights, std::size_t n, unsigned weight)
{
    WordBasis b;
    b.length_ = n;
    TensorWord w;
    // Depth-first in letter order yields lexicographic order.
    auto rec = [&](auto &&self, std::size_t remaining_len, unsigned remaining_weight) -> void {
        if (remaining_len == 0) {
            if (remaining_weight == 0) {
                b.words_.push_back(w);
            }
            return;
        }
        for (Letter k = 0; k < weights.size(); ++k) {
            // Each later letter needs weight at least 1.
            if (weights[k] + (remaining_len - 1) <= remaining_weight) {
                w.push_back(k);
                self(self, remaining_len - 1, remaining_weight - weights[k]);
                w.pop_back();
            }
        }
    };
    rec(rec, n, weight);
    b.build_index();
    return b;
}

std::optional<std::size_t> WordBasis::index_of(const TensorWord &w) const
{
    auto it = index_.find(w);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<Scalar> WordBasis::to_vector(const TensorElement &t) const
{
    std::vector<Scalar> v(words_.size());
    for (const auto &[w, c] : t.terms()) {
        auto idx = index_of(w);
        if (!idx) {
            throw std::invalid_argument("WordBasis: word outside basis");
        }
        v[*idx] = c;
    }
    return v;
}

TensorElement WordBasis::to_tensor(std::span<const Scalar> v) const
{
    TensorElement t(length_);
    for (std::size_t i = 0; i < v.size(); ++i) {
        t.add(words_[i], v[i]);
    }
    return t;
}

TensorElement LieBasis::embed(std::span<const Scalar> coords) const
{
    return words->to_tensor(inclusion * coords);
}

TensorElement LieBasis::column(std::size_t k) const
{
    TensorElement t(degree);
    for (std::size_t r = 0; r < inclusion.rows(); ++r) {
        t.add((*words)[r], inclusion(r, k));
    }
    return t;
}

std::vector<Scalar> LieBasis::coordinates(const TensorElement &t) const
{
    std::vector<Scalar> v(pivot_rows.size());
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
        v[k] = t.coefficient((*words)[pivot_rows[k]]);
    }
    return v;
}

bool LieBasis::contains(const TensorElement &t) const
{
    if (t.is_zero()) {
        return true;
    }
    if (t.degree() != degree) {
        return false;
    }
    for (const auto &[w, c] : t.terms()) {
        if (!words->index_of(w)) {
            return false;
        }
    }
    return embed(coordinates(t)) == t;
}

namespace {

std::shared_ptr<const LieBasis> from_spanning_rows(std::size_t dim_v, std::size_t n,
                                                   std::shared_ptr<const WordBasis> words,
                                                   const std::vector<TensorElement> &spanning)
{
    RationalMatrix rows(spanning.size(), words->size());
    for (std::size_t r = 0; r < spanning.size(); ++r) {
        for (const auto &[w, c] : spanning[r].terms()) {
            rows(r, *words->index_of(w)) = c;
        }
    }
    const auto reduced = rref(rows);
    auto basis = std::make_shared<LieBasis>();
    basis->dim_v = dim_v;
    basis->degree = n;
    basis->words = std::move(words);
    basis->inclusion = RationalMatrix(basis->words->size(), reduced.rank);
    for (std::size_t k = 0; k < reduced.rank; ++k) {
        for (std::size_t r = 0; r < basis->words->size(); ++r) {
            basis->inclusion(r, k) = reduced.reduced(k, r);
        }
    }
    basis->pivot_rows = reduced.pivot_cols;
    return basis;
}

void check_size(std::size_t words, std::size_t n, const Limits &limits)
{
    if (n > limits.max_degree) {
        throw ResourceLimitError("lie_basis: degree " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(limits.max_degree));
    }
    if (words > limits.max_columns) {
        throw ResourceLimitError("lie_basis: " + std::to_string(words) + " tensor words exceed cap " +
                                 std::to_string(limits.max_columns));
    }
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) {
            return cap + 1;
        }
    }
    return r;
}

template <typename Key>
class BasisCache {
public:
    std::shared_ptr<const LieBasis> find(const Key &k)
    {
        std::lock_guard lock(mutex_);
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : it->second;
    }
    std::shared_ptr<const LieBasis> insert(const Key &k, std::shared_ptr<const LieBasis> b)
    {
        std::lock_guard lock(mutex_);
        return map_.try_emplace(k, std::move(b)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<const LieBasis>> map_;
};

} // namespace

std::shared_ptr<const LieBasis> lie_basis(std::size_t dim_v, std::size_t n, const Limits &limits)
{
    if (n == 0 || dim_v == 0) {
        throw std::invalid_argument("lie_basis: need n >= 1 and dim V >= 1");
    }
    check_size(checked_power(dim_v, n, limits.max_columns), n, limits);

    static BasisCache<std::pair<std::size_t, std::size_t>> cache;
    const auto key = std::make_pair(dim_v, n);
    if (auto hit = cache.find(key)) {
        return hit;
    }
    auto words = std::make_shared<const WordBasis>(WordBasis::full(dim_v, n));
    std::vector<TensorElement> spanning;
    if (n == 1) {
        for (Letter k = 0; k < dim_v; ++k) {
            spanning.push_back(TensorElement::word({k}));
        }
    } else {
        const auto prev = lie_basis(dim_v, n - 1, limits);
        for (std::size_t c = 0; c < prev->dimension(); ++c) {
            const TensorElement tail = prev->column(c);
            for (Letter k = 0; k < dim_v; ++k) {
                spanning.push_back(graded_bracket(TensorElement::word({k}), tail));
            }
        }
    }
    return cache.insert(key, from_spanning_rows(dim_v, n, std::move(words), spanning));
}

std::shared_ptr<const LieBasis> lie_basis_weighted(std::span<const unsigned> weights, std::size_t n,
                                                   unsigned weight, const Limits &limits)
{
    if (n == 0 || weights.empty()) {
        throw std::invalid_argument("lie_basis_weighted: need n >= 1 and a nonempty alphabet");
    }
    auto words = std::make_shared<const WordBasis>(WordBasis::weighted(weights, n, weight));
    check_size(words->size(), n, limits);

    using Key = std::tuple<std::vector<unsigned>, std::size_t, unsigned>;
    static BasisCache<Key> cache;
    Key key{std::vector<unsigned>(weights.begin(), weights.end()), n, weight};
    if (auto hit = cache.find(key)) {
        return hit;
    }
    std::vector<TensorElement> spanning;
    if (n == 1) {
        for (Letter k = 0; k < weights.size(); ++k) {
            if (weights[k] == weight) {
                spanning.push_back(TensorElement::word({k}));
            }
        }
    } else {
        for (Letter k = 0; k < weights.size(); ++k) {
            if (weights[k] >= weight) {
                continue;
            }
            const auto prev = lie_basis_weighted(weights, n - 1, weight - weights[k], limits);
            for (std::size_t c = 0; c < prev->dimension(); ++c) {
                spanning.push_back(graded_bracket(TensorElement::word({k}), prev->column(c)));
            }
        }
    }
    return cache.insert(key, from_spanning_rows(weights.size(), n, std::move(words), spanning));
}

std::vector<Scalar> project_p(const LieBasis &basis, const TensorElement &t)
{
    if (!t.is_zero() && t.degree() != basis.degree) {
        throw std::invalid_argument("project_p: degree mismatch");
    }
    return basis.coordinates(bracket_image(t));
}

TensorElement apply_to_letter(const RationalMatrix &d, Letter letter)
{
    if (letter >= d.cols()) {
        throw std::invalid_argument("linear map: letter " + std::to_string(letter) + " outside domain of size " +
                                    std::to_string(d.cols()));
    }
    TensorElement out(1);
    for (std::size_t r = 0; r < d.rows(); ++r) {
        out.add({static_cast<Letter>(r)}, d(r, letter));
    }
    return out;
}

TensorElement extend_d(const RationalMatrix &d, const TensorElement &t)
{
    if (d.rows() != d.cols()) {
        throw std::invalid_argument("extend_d: D must be square");
    }
    TensorElement out(t.degree());
    for (const auto &[w, c] : t.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const TensorElement image = apply_to_letter(d, w[i]);
            for (const auto &[letter, coeff] : image.terms()) {
                TensorWord u = w;
                u[i] = letter.front();
                out.add(u, c * coeff);
            }
        }
    }
    return out;
}

TensorElement d_tilde(const RationalMatrix &d, const TensorElement &t)
{
    if (d.rows() != d.cols()) {
        throw std::invalid_argument("d_tilde: D must be square");
    }
    TensorElement out(t.degree());
    for (const auto &[w, c] : t.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Scalar sign = (i % 2 == 0) ? Scalar(-1) : Scalar(1); // (-1)^{i+1}, 0-based i
            const TensorElement image = apply_to_letter(d, w[i]);
            for (const auto &[letter, coeff] : image.terms()) {
                TensorWord u;
                u.reserve(w.size());
                u.push_back(letter.front());
                for (std::size_t k = 0; k < w.size(); ++k) {
                    if (k != i) {
                        u.push_back(w[k]);
                    }
                }
                out.add(u, sign * c * coeff);
            }
        }
    }
    return out;
}

} // namespace leibhom
