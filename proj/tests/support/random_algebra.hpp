#pragma once

#include <string>
#include <vector>

#include "leibhom/leibniz.hpp"
#include "leibhom/random.hpp"

namespace leibhom::test_support {

/// Transports the bracket of `a` along the basis change whose columns are
/// the new basis vectors: c'_ij = P^{-1} {P e_i, P e_j}.
inline LeibnizAlgebra change_basis(const LeibnizAlgebra &a, const RationalMatrix &p, const RationalMatrix &p_inv)
{
    const std::size_t n = a.dimension();
    LeibnizAlgebra out(a.name() + "'", a.basis_names());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element u{p.column(i)};
            const Element v{p.column(j)};
            const auto w = p_inv * bracket(a, u, v).coords;
            SparseVector s;
            for (std::size_t k = 0; k < n; ++k) {
                if (!w[k].is_zero()) {
                    s.emplace(k, w[k]);
                }
            }
            out.set_bracket(i, j, s);
        }
    }
    return out;
}

/// Unipotent upper-triangular times a permutation: always invertible, with
/// an inverse computed exactly by back substitution through rref.
inline RationalMatrix random_invertible(SplitMix64 &rng, std::size_t n, RationalMatrix &inverse)
{
    RationalMatrix m = RationalMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            m(r, c) = rng.small();
        }
    }
    for (std::size_t r = 1; r < n; ++r) {
        const std::size_t s = rng.below(r + 1);
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(m(r, c), m(s, c));
        }
    }
    const auto red = rref(hstack(m, RationalMatrix::identity(n)));
    inverse = RationalMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inverse(r, c) = red.reduced(r, n + c);
        }
    }
    return m;
}

/// A seeded valid algebra of dimension <= 3: a small catalog member or a
/// hemisemidirect-type algebra {m_i, x} = (A m)_i with random A, moved to a
/// random basis.
inline LeibnizAlgebra random_valid_algebra(std::uint64_t seed)
{
    SplitMix64 rng(seed);
    LeibnizAlgebra base;
    switch (rng.below(5)) {
    case 0:
        base = builtin("A2");
        break;
    case 1:
        base = builtin("lie-nonabelian2");
        break;
    case 2:
        base = builtin("heisenberg");
        break;
    case 3:
        base = builtin("sl2");
        break;
    default: {
        // x acts on span{m1, m2} from the right; {x, -} = 0, {m, m} = 0.
        base = LeibnizAlgebra("hsd", {"m1", "m2", "x"});
        for (std::size_t i = 0; i < 2; ++i) {
            SparseVector v;
            for (std::size_t k = 0; k < 2; ++k) {
                const Scalar c = rng.small();
                if (!c.is_zero()) {
                    v.emplace(k, c);
                }
            }
            base.set_bracket(i, 2, v);
        }
        break;
    }
    }
    RationalMatrix inv;
    const RationalMatrix p = random_invertible(rng, base.dimension(), inv);
    LeibnizAlgebra out = change_basis(base, p, inv);
    out.set_name("random-" + std::to_string(seed));
    return out;
}

} // namespace leibhom::test_support
