#include "leibhom/leibniz.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace leibhom {

namespace {

void axpy(SparseVector &acc, const Scalar &factor, const SparseVector &v)
{
    for (const auto &[k, c] : v) {
        auto [it, inserted] = acc.try_emplace(k, factor * c);
        if (!inserted) {
            it->second.add_product(factor, c);
            if (it->second.is_zero()) {
                acc.erase(it);
            }
        }
    }
}

SparseVector to_sparse(const Element &e)
{
    SparseVector v;
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (!e.coords[i].is_zero()) {
            v.emplace(i, e.coords[i]);
        }
    }
    return v;
}

Element to_dense(const SparseVector &v, std::size_t dim)
{
    Element e = Element::zero(dim);
    for (const auto &[k, c] : v) {
        e.coords[k] = c;
    }
    return e;
}

SparseVector unit(std::size_t i) { return SparseVector{{i, Scalar(1)}}; }

void check_element(const LeibnizAlgebra &a, const Element &e)
{
    if (e.coords.size() != a.dimension()) {
        throw std::invalid_argument("element of length " + std::to_string(e.coords.size()) +
                                    " used in algebra of dimension " + std::to_string(a.dimension()));
    }
}

} // namespace

Element Element::basis(std::size_t dim, std::size_t i)
{
    Element e = zero(dim);
    e.coords.at(i) = 1;
    return e;
}

bool Element::is_zero() const
{
    for (const auto &c : coords) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

LeibnizAlgebra::LeibnizAlgebra(std::string name, std::vector<std::string> basis,
                               std::optional<std::vector<unsigned>> weights)
    : name_(std::move(name)), basis_(std::move(basis)), weights_(std::move(weights)),
      structure_(basis_.size() * basis_.size())
{
    std::set<std::string> seen;
    for (const auto &b : basis_) {
        if (b.empty()) {
            throw InputError("algebra '" + name_ + "': empty basis name");
        }
        if (!seen.insert(b).second) {
            throw InputError("algebra '" + name_ + "': duplicate basis name '" + b + "'");
        }
    }
    if (weights_) {
        if (weights_->size() != basis_.size()) {
            throw InputError("algebra '" + name_ + "': " + std::to_string(weights_->size()) +
                             " weights for dimension " + std::to_string(basis_.size()));
        }
        for (unsigned w : *weights_) {
            if (w == 0) {
                throw InputError("algebra '" + name_ + "': weights must be positive");
            }
        }
    }
}

std::optional<std::size_t> LeibnizAlgebra::index_of(const std::string &basis_name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] == basis_name) {
            return i;
        }
    }
    return std::nullopt;
}

void LeibnizAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVector &value)
{
    const std::size_t n = basis_.size();
    if (i >= n || j >= n) {
        throw InputError("algebra '" + name_ + "': bracket index out of range");
    }
    SparseVector clean;
    for (const auto &[k, c] : value) {
        if (k >= n) {
            throw InputError("algebra '" + name_ + "': bracket value index out of range");
        }
        if (!c.is_zero()) {
            clean.emplace(k, c);
        }
    }
    structure_[i * n + j] = std::move(clean);
}

SparseVector bracket(const LeibnizAlgebra &a, const SparseVector &u, const SparseVector &v)
{
    SparseVector out;
    for (const auto &[i, x] : u) {
        for (const auto &[j, y] : v) {
            axpy(out, x * y, a.structure(i, j));
        }
    }
    return out;
}

Element bracket(const LeibnizAlgebra &a, const Element &u, const Element &v)
{
    check_element(a, u);
    check_element(a, v);
    return to_dense(bracket(a, to_sparse(u), to_sparse(v)), a.dimension());
}

std::vector<Violation> validate(const LeibnizAlgebra &a)
{
    const std::size_t n = a.dimension();
    if (const auto &w = a.weights()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto &[k, c] : a.structure(i, j)) {
                    if ((*w)[k] != (*w)[i] + (*w)[j]) {
                        throw InputError("algebra '" + a.name() + "': bracket {" + a.basis_names()[i] + "," +
                                         a.basis_names()[j] + "} has a component on '" +
                                         a.basis_names()[k] + "' of the wrong weight");
                    }
                }
            }
        }
    }
    std::vector<Violation> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVector ij = a.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                SparseVector r = bracket(a, unit(i), a.structure(j, k));
                axpy(r, Scalar(-1), bracket(a, ij, unit(k)));
                axpy(r, Scalar(1), bracket(a, a.structure(i, k), unit(j)));
                if (!r.empty()) {
                    out.push_back({i, j, k, to_dense(r, n)});
                }
            }
        }
    }
    return out;
}

RationalMatrix right_multiplication(const LeibnizAlgebra &a, const Element &g)
{
    check_element(a, g);
    const std::size_t n = a.dimension();
    RationalMatrix m(n, n);
    const SparseVector gs = to_sparse(g);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto &[k, c] : bracket(a, unit(j), gs)) {
            m(k, j) = c;
        }
    }
    return m;
}

RationalMatrix left_multiplication(const LeibnizAlgebra &a, const Element &x)
{
    check_element(a, x);
    const std::size_t n = a.dimension();
    RationalMatrix m(n, n);
    const SparseVector xs = to_sparse(x);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto &[k, c] : bracket(a, xs, unit(j))) {
            m(k, j) = c;
        }
    }
    return m;
}

Liezation liezation(const LeibnizAlgebra &a)
{
    const std::size_t n = a.dimension();
    std::vector<std::vector<Scalar>> relations;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            SparseVector s = a.structure(i, j);
            axpy(s, Scalar(1), a.structure(j, i));
            if (!s.empty()) {
                relations.push_back(to_dense(s, n).coords);
            }
        }
    }
    RationalMatrix rel(relations.size(), n);
    for (std::size_t r = 0; r < relations.size(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            rel(r, c) = relations[r][c];
        }
    }
    const auto reduced = rref(rel);
    std::vector<std::ptrdiff_t> pivot_row(n, -1);
    for (std::size_t r = 0; r < reduced.rank; ++r) {
        pivot_row[reduced.pivot_cols[r]] = static_cast<std::ptrdiff_t>(r);
    }
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_row[c] < 0) {
            kept.push_back(c);
        }
    }

    RationalMatrix proj(kept.size(), n);
    for (std::size_t q = 0; q < kept.size(); ++q) {
        proj(q, kept[q]) = 1;
    }
    for (std::size_t r = 0; r < reduced.rank; ++r) {
        const std::size_t p = reduced.pivot_cols[r];
        for (std::size_t q = 0; q < kept.size(); ++q) {
            const Scalar &entry = reduced.reduced(r, kept[q]);
            if (!entry.is_zero()) {
                proj(q, p) = -entry;
            }
        }
    }

    auto project = [&](const SparseVector &v) {
        SparseVector out;
        for (std::size_t q = 0; q < kept.size(); ++q) {
            Scalar s;
            for (const auto &[k, c] : v) {
                s.add_product(proj(q, k), c);
            }
            if (!s.is_zero()) {
                out.emplace(q, s);
            }
        }
        return out;
    };

    // The relation space must be a two-sided ideal for the quotient bracket
    // to be well defined.
    for (std::size_t r = 0; r < reduced.rank; ++r) {
        SparseVector s;
        for (std::size_t c = 0; c < n; ++c) {
            if (!reduced.reduced(r, c).is_zero()) {
                s.emplace(c, reduced.reduced(r, c));
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!project(bracket(a, s, unit(j))).empty() || !project(bracket(a, unit(j), s)).empty()) {
                throw CheckFailure("liezation: relation space of '" + a.name() + "' is not an ideal");
            }
        }
    }

    std::vector<std::string> names;
    std::optional<std::vector<unsigned>> weights;
    if (a.weights()) {
        weights.emplace();
    }
    for (std::size_t c : kept) {
        names.push_back(a.basis_names()[c]);
        if (weights) {
            weights->push_back((*a.weights())[c]);
        }
    }
    LeibnizAlgebra q(a.name() + "_Lie", names, weights);
    for (std::size_t x = 0; x < kept.size(); ++x) {
        for (std::size_t y = 0; y < kept.size(); ++y) {
            q.set_bracket(x, y, project(a.structure(kept[x], kept[y])));
        }
    }
    for (std::size_t x = 0; x < kept.size(); ++x) {
        for (std::size_t y = x; y < kept.size(); ++y) {
            SparseVector s = q.structure(x, y);
            axpy(s, Scalar(1), q.structure(y, x));
            if (!s.empty()) {
                throw CheckFailure("liezation: quotient of '" + a.name() + "' is not antisymmetric");
            }
        }
    }
    return {std::move(q), std::move(proj)};
}

TensorElement glie_action(const LeibnizAlgebra &a, const TensorElement &t, const Element &g)
{
    return extend_d(right_multiplication(a, g), t);
}

LeibnizAlgebra free_leibniz(std::size_t generators, unsigned max_weight, const Limits &limits)
{
    if (generators == 0 || max_weight == 0) {
        throw InputError("free_leibniz: need at least one generator and max weight >= 1");
    }
    std::size_t dim = 0;
    std::size_t layer = 1;
    for (unsigned w = 1; w <= max_weight; ++w) {
        layer *= generators;
        dim += layer;
        if (dim > limits.max_basis) {
            throw ResourceLimitError("free_leibniz: basis of " + std::to_string(generators) + " generators up to weight " +
                                     std::to_string(max_weight) + " exceeds cap " + std::to_string(limits.max_basis));
        }
    }

    std::vector<TensorWord> words;
    for (unsigned w = 1; w <= max_weight; ++w) {
        const WordBasis basis = WordBasis::full(generators, w);
        for (const auto &word : basis.words()) {
            words.push_back(word);
        }
    }
    std::map<TensorWord, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(words[i], i);
    }

    auto letter_name = [&](Letter l) -> std::string {
        if (generators <= 3) {
            return std::string(1, "xyz"[l]);
        }
        if (generators <= 26) {
            return std::string(1, static_cast<char>('a' + l));
        }
        return "x" + std::to_string(l) + ".";
    };
    std::vector<std::string> names;
    std::vector<unsigned> weights;
    for (const auto &w : words) {
        std::string s;
        for (Letter l : w) {
            s += letter_name(l);
        }
        names.push_back(s);
        weights.push_back(static_cast<unsigned>(w.size()));
    }

    // {a, v} = av for a letter v; {a, by} = {a,b}y - {ay, b}. Brackets above
    // max_weight are truncated to zero.
    using WordVector = std::map<TensorWord, Scalar>;
    std::map<std::pair<TensorWord, TensorWord>, WordVector> memo;
    auto br = [&](auto &&self, const TensorWord &a, const TensorWord &b) -> WordVector {
        if (a.size() + b.size() > max_weight) {
            return {};
        }
        auto key = std::make_pair(a, b);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        WordVector out;
        auto accumulate = [&out](const TensorWord &w, const Scalar &c) {
            auto [it, inserted] = out.try_emplace(w, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    out.erase(it);
                }
            }
        };
        if (b.size() == 1) {
            TensorWord w = a;
            w.push_back(b.front());
            accumulate(w, Scalar(1));
        } else {
            const Letter y = b.back();
            const TensorWord head(b.begin(), b.end() - 1);
            for (const auto &[w, c] : self(self, a, head)) {
                TensorWord wy = w;
                wy.push_back(y);
                accumulate(wy, c);
            }
            TensorWord ay = a;
            ay.push_back(y);
            for (const auto &[w, c] : self(self, ay, head)) {
                accumulate(w, -c);
            }
        }
        memo.emplace(key, out);
        return out;
    };

    LeibnizAlgebra alg("free_leibniz(" + std::to_string(generators) + "," + std::to_string(max_weight) + ")", names,
                       weights);
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            SparseVector v;
            for (const auto &[w, c] : br(br, words[i], words[j])) {
                v.emplace(index.at(w), c);
            }
            alg.set_bracket(i, j, v);
        }
    }
    return alg;
}

namespace {

LeibnizAlgebra make(const std::string &name, std::vector<std::string> basis,
                    const std::vector<std::tuple<std::size_t, std::size_t, SparseVector>> &brackets)
{
    LeibnizAlgebra a(name, std::move(basis));
    for (const auto &[i, j, v] : brackets) {
        a.set_bracket(i, j, v);
    }
    return a;
}

LeibnizAlgebra build_builtin(const std::string &name)
{
    const std::string abelian = "abelian-";
    if (name.rfind(abelian, 0) == 0) {
        const std::string digits = name.substr(abelian.size());
        std::size_t d = 0;
        bool ok = !digits.empty() && digits.size() <= 2;
        for (char ch : digits) {
            ok = ok && ch >= '0' && ch <= '9';
        }
        if (ok) {
            d = std::stoul(digits);
        }
        if (!ok || d == 0 || d > 64) {
            throw InputError("builtin: abelian-<d> needs 1 <= d <= 64, got '" + name + "'");
        }
        std::vector<std::string> basis;
        for (std::size_t i = 1; i <= d; ++i) {
            basis.push_back("e" + std::to_string(i));
        }
        return LeibnizAlgebra(name, basis);
    }
    if (name == "A2") {
        return make(name, {"x", "y"}, {{0, 0, {{1, 1}}}});
    }
    if (name == "lie-nonabelian2") {
        return make(name, {"x", "y"}, {{0, 1, {{0, 1}}}, {1, 0, {{0, -1}}}});
    }
    if (name == "sl2") {
        // e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f.
        return make(name, {"e", "f", "h"},
                    {{0, 1, {{2, 1}}},
                     {1, 0, {{2, -1}}},
                     {2, 0, {{0, 2}}},
                     {0, 2, {{0, -2}}},
                     {2, 1, {{1, -2}}},
                     {1, 2, {{1, 2}}}});
    }
    if (name == "heisenberg") {
        return make(name, {"x", "y", "z"}, {{0, 1, {{2, 1}}}, {1, 0, {{2, -1}}}});
    }
    if (name == "hemisemidirect3") {
        // Abelian x acting on the right of span{m1,m2}; {x, m} = 0.
        return make(name, {"x", "m1", "m2"}, {{1, 0, {{1, 1}}}, {2, 0, {{1, 1}, {2, 1}}}});
    }
    if (name == "cyclic3") {
        LeibnizAlgebra a = free_leibniz(1, 3);
        a.set_name(name);
        return a;
    }
    if (name == "A2-lie2-sum") {
        return make(name, {"x", "y", "u", "v"}, {{0, 0, {{1, 1}}}, {2, 3, {{2, 1}}}, {3, 2, {{2, -1}}}});
    }
    std::string list;
    for (const auto &c : builtin_catalog()) {
        list += (list.empty() ? "" : ", ") + c;
    }
    throw InputError("unknown builtin algebra '" + name + "'; catalog: " + list);
}

} // namespace

std::vector<std::string> builtin_catalog()
{
    return {"abelian-<d>", "A2", "lie-nonabelian2", "sl2", "heisenberg", "hemisemidirect3", "cyclic3", "A2-lie2-sum"};
}

LeibnizAlgebra builtin(const std::string &name)
{
    LeibnizAlgebra a = build_builtin(name);
    if (!validate(a).empty()) {
        throw CheckFailure("builtin '" + name + "' fails the Leibniz identity");
    }
    return a;
}

} // namespace leibhom
