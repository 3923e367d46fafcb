#include <gtest/gtest.h>

#include "leibhom/algebra_io.hpp"
#include "leibhom/leibniz.hpp"
#include "leibhom/report.hpp"
#include "support/random_algebra.hpp"

using namespace leibhom;

namespace {

std::vector<std::string> concrete_builtins()
{
    std::vector<std::string> out{"abelian-1", "abelian-3"};
    for (const auto &name : builtin_catalog()) {
        if (name.find('<') == std::string::npos) {
            out.push_back(name);
        }
    }
    return out;
}

} // namespace

TEST(Leibniz, BuiltinsAreValid)
{
    for (const auto &name : concrete_builtins()) {
        const auto a = builtin(name);
        EXPECT_TRUE(validate(a).empty()) << name;
    }
    EXPECT_EQ(builtin("abelian-5").dimension(), 5u);
    EXPECT_THROW(builtin("abelian-0"), InputError);
    EXPECT_THROW(builtin("nope"), InputError);
}

TEST(Leibniz, A2Brackets)
{
    const auto a = builtin("A2");
    const auto x = Element::basis(2, 0);
    const auto y = Element::basis(2, 1);
    EXPECT_EQ(bracket(a, x, x), y);
    EXPECT_TRUE(bracket(a, x, y).is_zero());
    EXPECT_TRUE(bracket(a, y, x).is_zero());
}

TEST(Leibniz, DetectsViolations)
{
    // {x,y} = x, {y,x} = x is not Leibniz.
    LeibnizAlgebra a("bad", {"x", "y"});
    a.set_bracket(0, 1, {{0, Scalar(1)}});
    a.set_bracket(1, 0, {{0, Scalar(1)}});
    const auto v = validate(a);
    ASSERT_FALSE(v.empty());
    for (const auto &viol : v) {
        EXPECT_FALSE(viol.residual.is_zero());
    }
}

TEST(Leibniz, ConstructorRejectsBadInput)
{
    EXPECT_THROW(LeibnizAlgebra("a", {"x", "x"}), InputError);
    EXPECT_THROW(LeibnizAlgebra("a", {"x", ""}), InputError);
    EXPECT_THROW(LeibnizAlgebra("a", {"x"}, std::vector<unsigned>{0}), InputError);
    EXPECT_THROW(LeibnizAlgebra("a", {"x"}, std::vector<unsigned>{1, 1}), InputError);
    LeibnizAlgebra ok("a", {"x"});
    EXPECT_THROW(ok.set_bracket(0, 3, {}), InputError);
}

TEST(Leibniz, InconsistentWeightsThrow)
{
    LeibnizAlgebra a("w", {"x", "y"}, std::vector<unsigned>{1, 1});
    a.set_bracket(0, 0, {{1, Scalar(1)}});
    EXPECT_THROW(validate(a), InputError);
}

TEST(Leibniz, Liezation)
{
    EXPECT_EQ(liezation(builtin("A2")).quotient.dimension(), 1u);
    EXPECT_EQ(liezation(builtin("sl2")).quotient.dimension(), 3u);
    EXPECT_EQ(liezation(builtin("abelian-3")).quotient.dimension(), 3u);
    const auto l = liezation(builtin("hemisemidirect3"));
    EXPECT_EQ(l.quotient.dimension(), 1u);
    EXPECT_TRUE(validate(l.quotient).empty());
    EXPECT_EQ(l.projection.rows(), 1u);
    EXPECT_EQ(l.projection.cols(), 3u);
}

TEST(Leibniz, FreeLeibnizIsValidAndGraded)
{
    for (std::size_t g = 1; g <= 2; ++g) {
        for (unsigned top = 1; top <= 5; ++top) {
            const auto a = free_leibniz(g, top);
            EXPECT_TRUE(validate(a).empty()) << g << " " << top;
            const auto &wt = *a.weights();
            for (std::size_t i = 0; i < a.dimension(); ++i) {
                for (std::size_t j = 0; j < a.dimension(); ++j) {
                    for (const auto &[k, c] : a.structure(i, j)) {
                        EXPECT_EQ(wt[k], wt[i] + wt[j]);
                    }
                }
            }
        }
    }
    const auto a = free_leibniz(2, 3);
    EXPECT_EQ(a.dimension(), 2u + 4u + 8u);
    EXPECT_EQ(a.basis_names()[2], "xx");
    // {x,{y,x}} = {{x,y},x} - {{x,x},y} = xyx - xxy
    const auto x = *a.index_of("x");
    const auto y = *a.index_of("y");
    const auto yx = bracket(a, Element::basis(a.dimension(), y), Element::basis(a.dimension(), x));
    const auto lhs = bracket(a, Element::basis(a.dimension(), x), yx);
    Element expect = Element::zero(a.dimension());
    expect.coords[*a.index_of("xyx")] = 1;
    expect.coords[*a.index_of("xxy")] = -1;
    EXPECT_EQ(lhs, expect);
    Limits tight;
    tight.max_basis = 10;
    EXPECT_THROW(free_leibniz(2, 3, tight), ResourceLimitError);
}

TEST(Leibniz, FreeLeibnizLiezationHasWittDimensions)
{
    const auto a = free_leibniz(2, 5);
    const auto q = liezation(a).quotient;
    std::vector<std::size_t> count(6, 0);
    for (unsigned w : *q.weights()) {
        ++count[w];
    }
    for (std::size_t w = 1; w <= 5; ++w) {
        EXPECT_EQ(count[w], witt_number(2, w)) << w;
    }
}

TEST(Leibniz, TruncationIndependence)
{
    // Brackets landing at weight <= 3 do not depend on the truncation.
    const auto small = free_leibniz(2, 3);
    const auto big = free_leibniz(2, 5);
    for (std::size_t i = 0; i < small.dimension(); ++i) {
        for (std::size_t j = 0; j < small.dimension(); ++j) {
            const auto &s = small.structure(i, j);
            const auto &b = big.structure(i, j);
            if ((*small.weights())[i] + (*small.weights())[j] <= 3) {
                EXPECT_EQ(s, b);
            } else {
                EXPECT_TRUE(s.empty());
            }
        }
    }
}

TEST(Leibniz, RandomValidAlgebras)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = test_support::random_valid_algebra(seed);
        EXPECT_LE(a.dimension(), 3u);
        EXPECT_TRUE(validate(a).empty()) << seed;
    }
}

TEST(AlgebraIo, RoundTrip)
{
    for (const auto &name : concrete_builtins()) {
        const auto a = builtin(name);
        EXPECT_EQ(algebra_from_json(algebra_to_json(a)), a) << name;
    }
}

TEST(AlgebraIo, ParsesDocument)
{
    const auto a = algebra_from_string(R"({"name":"t","dimension":2,"basis":["x","y"],
        "brackets":[{"left":"x","right":"x","value":{"y":"1/2"}}]})");
    EXPECT_EQ(a.structure(0, 0).at(1), Scalar(1, 2));
    EXPECT_TRUE(validate(a).empty());
}

TEST(AlgebraIo, ReportsFieldPaths)
{
    try {
        algebra_from_string(R"({"name":"t","dimension":2,"basis":["x","y"],
            "brackets":[{"left":"x","right":"x","value":{"y":"1/0"}}]})");
        FAIL();
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("brackets[0].value.y"), std::string::npos) << e.what();
    }
    EXPECT_THROW(algebra_from_string(R"({"name":"t","dimension":1,"basis":["x"],"extra":1})"), InputError);
    EXPECT_THROW(algebra_from_string(R"({"name":"t","dimension":2,"basis":["x"]})"), InputError);
    EXPECT_THROW(algebra_from_string(R"({"name":"t","dimension":1,"basis":["x"],
        "brackets":[{"left":"x","right":"z","value":{}}]})"),
                 InputError);
    EXPECT_THROW(algebra_from_string(R"({"name":"t","dimension":1,"basis":["x"],
        "brackets":[{"left":"x","right":"x","value":{}},{"left":"x","right":"x","value":{}}]})"),
                 InputError);
    EXPECT_THROW(algebra_from_string("{not json"), InputError);
    EXPECT_THROW(algebra_from_file("/nonexistent/file.json"), InputError);
}
