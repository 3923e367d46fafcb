#include <gtest/gtest.h>

#include "leibhom/hopf.hpp"
#include "leibhom/random.hpp"

using namespace leibhom;

namespace {

TensorElement w(TensorWord word, Scalar c = 1) { return TensorElement::word(std::move(word), c); }

// Triple tensors for coassociativity, kept local to the test.
using Triple = std::map<std::tuple<TensorWord, TensorWord, TensorWord>, Scalar>;

void add(Triple &t, const TensorWord &a, const TensorWord &b, const TensorWord &c, const Scalar &s)
{
    auto key = std::make_tuple(a, b, c);
    auto &slot = t[key];
    slot += s;
    if (slot.is_zero()) {
        t.erase(key);
    }
}

Triple delta_left(const TensorElement &t)
{
    Triple out;
    const auto outer = coproduct(t);
    for (const auto &[key, c] : outer.terms()) {
        const auto &[l, r] = key;
        const auto inner = coproduct(TensorElement::word(l));
        for (const auto &[k2, c2] : inner.terms()) {
            add(out, k2.first, k2.second, r, c * c2);
        }
    }
    return out;
}

Triple delta_right(const TensorElement &t)
{
    Triple out;
    const auto outer = coproduct(t);
    for (const auto &[key, c] : outer.terms()) {
        const auto &[l, r] = key;
        const auto inner = coproduct(TensorElement::word(r));
        for (const auto &[k2, c2] : inner.terms()) {
            add(out, l, k2.first, k2.second, c * c2);
        }
    }
    return out;
}

} // namespace

TEST(Hopf, CoproductOfSmallWords)
{
    TwoSidedTensor expect;
    expect.add({0, 1}, {}, 1);
    expect.add({0}, {1}, 1);
    expect.add({1}, {0}, -1);
    expect.add({}, {0, 1}, 1);
    EXPECT_EQ(coproduct(w({0, 1})), expect);
}

TEST(Hopf, Coassociative)
{
    SplitMix64 rng(1);
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto t = random_tensor(rng, 2, n);
        EXPECT_EQ(delta_left(t), delta_right(t)) << n;
    }
}

TEST(Hopf, CoproductIsAlgebraMorphism)
{
    SplitMix64 rng(2);
    for (std::size_t p = 0; p <= 3; ++p) {
        for (std::size_t q = 0; q <= 3; ++q) {
            const auto a = random_tensor(rng, 2, p);
            const auto b = random_tensor(rng, 2, q);
            EXPECT_EQ(coproduct(concat(a, b)), coproduct(a) * coproduct(b));
        }
    }
}

TEST(Hopf, LieElementsArePrimitive)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto basis = lie_basis(2, n);
        for (std::size_t k = 0; k < basis->dimension(); ++k) {
            const auto x = basis->column(k);
            TwoSidedTensor expect = tensor_product(x, TensorElement::unit());
            expect += tensor_product(TensorElement::unit(), x);
            EXPECT_EQ(coproduct(x), expect);
        }
    }
    // xx + yy... a non-Lie element is not primitive
    const auto t = w({0, 1});
    TwoSidedTensor prim = tensor_product(t, TensorElement::unit());
    prim += tensor_product(TensorElement::unit(), t);
    EXPECT_NE(coproduct(t), prim);
}

TEST(Hopf, MuInvertsSplitting)
{
    const auto t = w({0, 1, 1}, 3);
    EXPECT_EQ(mu(tensor_product(w({0}), w({1, 1}, 3))), t);
    EXPECT_TRUE(mu(TwoSidedTensor{}).is_zero());
}

TEST(Hopf, PdExample)
{
    const auto dm = RationalMatrix::identity(2);
    EXPECT_EQ(p_d(dm, w({0, 1})), nested_bracket({0, 1}));
    EXPECT_TRUE(p_d(dm, TensorElement::unit()).is_zero());
}

TEST(Hopf, WignerAndFriedrichs)
{
    SplitMix64 rng(3);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto dm = random_matrix(rng, d, d);
                EXPECT_TRUE(wigner_check(dm, random_tensor(rng, d, n)));
                const auto basis = lie_basis(d, n);
                std::vector<Scalar> c(basis->dimension());
                for (auto &x : c) {
                    x = rng.small();
                }
                EXPECT_TRUE(friedrichs_check(dm, *basis, c));
            }
        }
    }
    // p_D = D_n fails off the Lie subspace.
    const auto dm = RationalMatrix::identity(2);
    EXPECT_NE(p_d(dm, w({0, 1})), extend_d(dm, w({0, 1})));
}
