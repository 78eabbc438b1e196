#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace z2z4xi;
using namespace z2z4xi::testing;

namespace {

template <class E>
SkewPoly<E> P(const ContextPtr& ctx, std::string_view s, int t = 1) {
    return text::parse_poly<E>(ctx, Automorphism(t), s);
}

}  // namespace

TEST(SkewMul, ProductsOfDegreeOneMonomials) {
    auto ctx = ctx_m2();
    auto f = P<RingElem>(ctx, "w*x"), g = P<RingElem>(ctx, "(1+w)*x");
    EXPECT_EQ(f * g, P<RingElem>(ctx, "(1+w)*x^2"));
    EXPECT_EQ(g * f, P<RingElem>(ctx, "3*w*x^2"));
    EXPECT_NE(f * g, g * f);
}

TEST(SkewMul, TwistFollowsTheAutomorphismPower) {
    auto ctx = ctx_m2();
    // x * w = theta^t(w) x
    EXPECT_EQ(P<RingElem>(ctx, "x") * P<RingElem>(ctx, "w"), P<RingElem>(ctx, "(3+3*w)*x"));
    EXPECT_EQ(P<RingElem>(ctx, "x", 2) * P<RingElem>(ctx, "w", 2), P<RingElem>(ctx, "w*x", 2));
    EXPECT_EQ(P<RingElem>(ctx, "x", 3) * P<RingElem>(ctx, "w", 3), P<RingElem>(ctx, "(3+3*w)*x", 3));
    EXPECT_THROW(P<RingElem>(ctx, "x", 1) * P<RingElem>(ctx, "x", 2), Error);
}

TEST(SkewMul, IsAssociativeAndDistributive) {
    Rng rng(7);
    for (const auto& ctx : {ctx_m2(), ctx_m3()}) {
        for (int t = 1; t <= ctx->degree(); ++t) {
            const Automorphism th(t);
            for (int i = 0; i < 60; ++i) {
                auto a = random_poly<RingElem>(ctx, th, 4, rng);
                auto b = random_poly<RingElem>(ctx, th, 4, rng);
                auto c = random_poly<RingElem>(ctx, th, 4, rng);
                EXPECT_EQ((a * b) * c, a * (b * c));
                EXPECT_EQ(a * (b + c), a * b + a * c);
                EXPECT_EQ((a + b) * c, a * c + b * c);
                EXPECT_EQ(poly_mod2(a * b), poly_mod2(a) * poly_mod2(b));
            }
        }
    }
}

template <class E>
void check_division(const ContextPtr& ctx, Automorphism th, Rng& rng, int pairs) {
    for (int i = 0; i < pairs; ++i) {
        auto f = random_poly<E>(ctx, th, 9, rng);
        auto g = random_unit_leading<E>(ctx, th, std::uniform_int_distribution<int>(0, 5)(rng), rng);
        auto d = right_divide(f, g);
        ASSERT_EQ(d.quotient * g + d.remainder, f);
        ASSERT_LT(d.remainder.degree(), g.degree());
    }
}

TEST(RightDivide, IdentityOnRandomUnitLeadingPairs) {
    Rng rng(11);
    check_division<RingElem>(ctx_m2(), Automorphism(1), rng, 600);
    check_division<FieldElem>(ctx_m2(), Automorphism(1), rng, 200);
    check_division<RingElem>(ctx_m3(), Automorphism(2), rng, 300);
    check_division<FieldElem>(ctx_m3(), Automorphism(1), rng, 100);
}

TEST(RightDivide, PublishedCofactors) {
    auto ctx = ctx_m2();
    auto d = right_divide(P<FieldElem>(ctx, "x^7-1"), P<FieldElem>(ctx, "1+x+x^3"));
    EXPECT_EQ(d.quotient, P<FieldElem>(ctx, "1+x+x^2+x^4"));
    EXPECT_TRUE(d.remainder.is_zero());

    auto e = right_divide(P<RingElem>(ctx, "x^4-1"), P<RingElem>(ctx, "1+x^2"));
    EXPECT_EQ(e.quotient, P<RingElem>(ctx, "x^2-1"));
    EXPECT_TRUE(e.remainder.is_zero());

    EXPECT_TRUE(right_divides(P<RingElem>(ctx, "3+x"), P<RingElem>(ctx, "x^7-1")));
    EXPECT_TRUE(right_divides(P<RingElem>(ctx, "x^2+2*w*x+1"), P<RingElem>(ctx, "x^4-1")));
    EXPECT_TRUE(right_divides(P<RingElem>(ctx, "1+2*x+3*x^2+x^3+x^4"), P<RingElem>(ctx, "x^7-1")));
    // the generator plus its torsion part does not divide
    EXPECT_FALSE(right_divides(P<RingElem>(ctx, "1+2*x+3*x^2+x^3+x^4+2*(3+x)"), P<RingElem>(ctx, "x^7-1")));
}

TEST(RightDivide, PublishedFactorizations) {
    auto ctx = ctx_m2();
    EXPECT_EQ(P<FieldElem>(ctx, "(1+x)*(1+x+x^3)*(1+x^2+x^3)"), P<FieldElem>(ctx, "x^7-1"));
    EXPECT_EQ(P<RingElem>(ctx, "(3+x)*(3+x+2*x^2+x^3)*(3+2*x+3*x^2+x^3)"), P<RingElem>(ctx, "x^7-1"));
    EXPECT_EQ(P<FieldElem>(ctx, "(x^2+w^2*x+w^2)*(x^2+w^2*x+w)"), P<FieldElem>(ctx, "x^4-1"));
    EXPECT_EQ(P<RingElem>(ctx, "(x^2+2*w*x+3)*(x^2+2*w*x+1)"), P<RingElem>(ctx, "x^4-1"));
}

TEST(RightDivide, RejectsBadDivisors) {
    auto ctx = ctx_m2();
    try {
        right_divide(P<RingElem>(ctx, "x^3"), RingPoly::zero(ctx, Automorphism(1)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
    try {
        right_divide(P<RingElem>(ctx, "x^3"), P<RingElem>(ctx, "2*x+1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisorNotUnitLeading);
    }
}

TEST(SkewPoly, DegreeAndLeadingCoefficient) {
    auto ctx = ctx_m2();
    auto z = RingPoly::zero(ctx, Automorphism(1));
    EXPECT_EQ(z.degree(), kDegreeOfZero);
    EXPECT_TRUE(z.is_zero());
    EXPECT_THROW(z.leading(), Error);
    auto p = P<RingElem>(ctx, "2*x^3+x");
    EXPECT_EQ(p.degree(), 3);
    EXPECT_FALSE(p.leading().is_unit());
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(RingPoly::x_n_minus_one(ctx, 3, Automorphism(1)), P<RingElem>(ctx, "x^3+3"));
}

TEST(SkewPoly, ReductionModuloXnMinusOneFoldsExponents) {
    auto ctx = ctx_m2();
    auto p = P<RingElem>(ctx, "w*x^5+x^4+2*x+1");
    EXPECT_EQ(reduce_mod_xn(p, 4), P<RingElem>(ctx, "(2+w)*x+2"));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly<RingElem>(ctx, Automorphism(1), 10, rng);
        EXPECT_EQ(reduce_mod_xn(f, 4), right_divide(f, RingPoly::x_n_minus_one(ctx, 4, Automorphism(1))).remainder);
    }
}

TEST(SkewPoly, LiftAndReduce) {
    auto ctx = ctx_m2();
    auto f = P<FieldElem>(ctx, "w*x^2+1");
    EXPECT_EQ(poly_mod2(lift_poly(f)), f);
    EXPECT_TRUE(poly_mod2(P<RingElem>(ctx, "2*x^2+2*w")).is_zero());
}
