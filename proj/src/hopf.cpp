#include "leibhom/hopf.hpp"

#include <stdexcept>

namespace leibhom {

void TwoSidedTensor::add(const TensorWord &left, const TensorWord &right, const Scalar &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{left, right}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TwoSidedTensor &TwoSidedTensor::operator+=(const TwoSidedTensor &rhs)
{
    for (const auto &[k, c] : rhs.terms_) {
        add(k.first, k.second, c);
    }
    return *this;
}

TwoSidedTensor operator*(const TwoSidedTensor &x, const TwoSidedTensor &y)
{
    TwoSidedTensor out;
    for (const auto &[ab, s] : x.terms()) {
        for (const auto &[cd, t] : y.terms()) {
            TensorWord left = ab.first;
            left.insert(left.end(), cd.first.begin(), cd.first.end());
            TensorWord right = ab.second;
            right.insert(right.end(), cd.second.begin(), cd.second.end());
            const bool odd = (ab.second.size() * cd.first.size()) % 2 == 1;
            out.add(left, right, odd ? -(s * t) : s * t);
        }
    }
    return out;
}

TwoSidedTensor tensor_product(const TensorElement &a, const TensorElement &b)
{
    TwoSidedTensor out;
    for (const auto &[u, x] : a.terms()) {
        for (const auto &[v, y] : b.terms()) {
            out.add(u, v, x * y);
        }
    }
    return out;
}

TwoSidedTensor coproduct(const TensorElement &t)
{
    const std::size_t n = t.degree();
    if (n >= 8 * sizeof(std::size_t) - 1) {
        throw std::invalid_argument("coproduct: degree too large");
    }
    TwoSidedTensor out;
    for (const auto &[w, c] : t.terms()) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            TensorWord left;
            TensorWord right;
            // Inversions: a complement position before a chosen position.
            std::size_t skipped = 0;
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::size_t{1} << i)) {
                    left.push_back(w[i]);
                    inversions += skipped;
                } else {
                    right.push_back(w[i]);
                    ++skipped;
                }
            }
            out.add(left, right, inversions % 2 == 0 ? c : -c);
        }
    }
    return out;
}

TensorElement mu(const TwoSidedTensor &t)
{
    if (t.is_zero()) {
        return TensorElement(0);
    }
    const auto &first = t.terms().begin()->first;
    TensorElement out(first.first.size() + first.second.size());
    for (const auto &[k, c] : t.terms()) {
        TensorWord w = k.first;
        w.insert(w.end(), k.second.begin(), k.second.end());
        out.add(w, c);
    }
    return out;
}

TensorElement p_d(const RationalMatrix &d, const TensorElement &t)
{
    TensorElement out(t.degree());
    if (t.degree() == 0) {
        return out;
    }
    for (const auto &[w, c] : t.terms()) {
        TensorElement nested = apply_to_letter(d, w.back());
        for (std::size_t k = w.size() - 1; k-- > 0;) {
            nested = graded_bracket(TensorElement::word({w[k]}), nested);
        }
        nested *= c;
        out += nested;
    }
    return out;
}

bool wigner_check(const RationalMatrix &d, const TensorElement &t)
{
    const TwoSidedTensor delta = coproduct(t);
    TensorElement lhs(t.degree());
    for (const auto &[k, c] : delta.terms()) {
        if (k.first.empty()) {
            continue; // p_D kills the scalar left factor
        }
        TensorElement left = p_d(d, TensorElement::word(k.first, c));
        lhs += concat(left, TensorElement::word(k.second));
    }
    return lhs == extend_d(d, t);
}

bool friedrichs_check(const RationalMatrix &d, const LieBasis &basis, std::span<const Scalar> coords)
{
    const TensorElement omega = basis.embed(coords);
    return p_d(d, omega) == extend_d(d, omega);
}

} // namespace leibhom
