#include "finfree/error.hpp"
#include "finfree/poly_core.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace finfree;

namespace {

Polynomial mono(std::vector<Rational> c) { return Polynomial::from_monomial(c); }

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(PolyCore, ConventionRoundTrip) {
    // x^2 - 3x + 2 has e = (1, 3, 2)
    const Polynomial p = mono({2, -3, 1});
    EXPECT_EQ(p.e(), (std::vector<Rational>{1, 3, 2}));
    EXPECT_EQ(p.monomial(), (std::vector<Rational>{2, -3, 1}));
    EXPECT_EQ(p, Polynomial::from_roots({1, 2}));
}

TEST(PolyCore, AmbientDegreeIsKept) {
    const Polynomial p = Polynomial::from_monomial({1, 1}, 4);
    EXPECT_EQ(p.n(), 4);
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.e(0), 0);
    EXPECT_TRUE(Polynomial::zero(3).is_zero());
}

TEST(PolyCore, DilateIdentity) {
    const Polynomial p = mono({2, -3, 1});
    EXPECT_EQ(dilate(p, 1), p);
}

TEST(PolyCore, DilateLinear) {
    // e_1 of x - 1 scales 1 -> 2
    EXPECT_EQ(dilate(mono({-1, 1}), 2), mono({-2, 1}));
}

TEST(PolyCore, DilateComposes) {
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 6; ++n) {
        const Polynomial p = oracle::random_poly(rng, n);
        EXPECT_EQ(dilate(dilate(p, 2), 3), dilate(p, 6));
        const Rational a = oracle::random_rational(rng) + Rational(1, 7);
        const Rational b = oracle::random_rational(rng) - Rational(1, 11);
        EXPECT_EQ(dilate(dilate(p, a), b), dilate(p, a * b));
    }
}

TEST(PolyCore, DilateMatchesDefinition) {
    // alpha^n p(x / alpha) evaluated pointwise
    std::mt19937_64 rng(12);
    const Polynomial p = oracle::random_poly(rng, 5);
    const Rational alpha(-3, 2);
    for (int i = -3; i <= 3; ++i) {
        const Rational x(i, 3);
        EXPECT_EQ(evaluate(dilate(p, alpha), x), ipow(alpha, 5) * evaluate(p, x / alpha));
    }
}

TEST(PolyCore, DilateByZeroFails) {
    try {
        dilate(mono({1, 1}), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroDilation);
    }
}

TEST(PolyCore, ShiftExamples) {
    EXPECT_EQ(shift(mono({0, 0, 1}), 1), mono({1, -2, 1}));
    const Polynomial p = mono({2, -3, 1});
    EXPECT_EQ(shift(p, 0), p);
    // (x+1-1)(x+1-2) = x^2 - x
    EXPECT_EQ(shift(p, -1), mono({0, -1, 1}));
}

TEST(PolyCore, ShiftEvaluatesAtTranslate) {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 7; ++n) {
        const Polynomial p = oracle::random_poly(rng, n);
        const Rational a = oracle::random_rational(rng);
        for (int i = -4; i <= 4; ++i) {
            const Rational x(i, 2);
            EXPECT_EQ(evaluate(shift(p, a), x), evaluate(p, x - a));
        }
    }
}

TEST(PolyCore, ShiftFloatBackendTolerance) {
    std::mt19937_64 rng(14);
    const unsigned bits = 128;
    PrecisionGuard guard(bits);
    for (int n = 1; n <= 7; ++n) {
        const Polynomial p = oracle::random_poly(rng, n);
        const Rational a = oracle::random_rational(rng);
        const Polynomial fp = shift(p.to_float(bits), a);
        for (int i = -4; i <= 4; ++i) {
            const Rational x(i, 3);
            const Real exact = to_real(evaluate(p, x - a));
            const Real got = evaluate(fp, Complex(to_real(x))).re;
            const Real tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits) + 10) *
                             (1 + boost::multiprecision::abs(exact));
            EXPECT_LE(boost::multiprecision::abs(got - exact), tol);
        }
    }
}

TEST(PolyCore, ReverseExamples) {
    // x^2 p(1/x) for x^2 - 3x + 2 is 2x^2 - 3x + 1
    EXPECT_EQ(reverse(mono({2, -3, 1})), mono({1, -3, 2}));
    // x^3 - 1 -> 1 - x^3
    EXPECT_EQ(reverse(mono({-1, 0, 0, 1})), mono({1, 0, 0, -1}));
}

TEST(PolyCore, ReverseIsInvolution) {
    std::mt19937_64 rng(15);
    for (int n = 1; n <= 8; ++n) {
        Polynomial p = oracle::random_poly(rng, n);
        if (p.e(n) == 0) continue;
        EXPECT_EQ(reverse(reverse(p)), p);
        const Rational x(3, 5);
        EXPECT_EQ(evaluate(reverse(p), x), ipow(x, n) * evaluate(p, 1 / x));
    }
}

TEST(PolyCore, EvaluateExamples) {
    const Polynomial p = mono({2, -3, 1});
    EXPECT_EQ(evaluate(p, Rational(1)), 0);
    EXPECT_EQ(evaluate(p, Rational(0)), 2);
    PrecisionGuard guard(128);
    // i^2 - 3i + 2 = 1 - 3i
    const Complex v = evaluate(p, Complex(Real(0), Real(1)));
    EXPECT_EQ(v.re, 1);
    EXPECT_EQ(v.im, -3);
}

TEST(PolyCore, MonicAndDerivative) {
    const Polynomial p = mono({2, -6, 4});
    EXPECT_EQ(p.monic(), mono({Rational(1, 2), -3 * Rational(1, 2), 1}));
    EXPECT_EQ(p.derivative(), mono({-6, 8}));
}

TEST(PolyCore, JsonRoundTripIsExact) {
    std::mt19937_64 rng(16);
    for (int n = 0; n <= 8; ++n) {
        const Polynomial p = oracle::random_poly(rng, n);
        const std::string text = to_json(p);
        EXPECT_EQ(polynomial_from_json(text), p);
        EXPECT_EQ(to_json(polynomial_from_json(text)), text);
    }
    const Polynomial p = mono({Rational(-7, 3), 0, Rational(5, 2)});
    EXPECT_EQ(to_json(p), R"({"n":2,"e":["5/2","0","-7/3"]})");
}

TEST(PolyCore, JsonRejectsMalformed) {
    EXPECT_THROW(polynomial_from_json("{\"n\":2,\"e\":[\"1\"]}"), Error);
    EXPECT_THROW(polynomial_from_json("not json"), Error);
}

TEST(PolyCore, ParseRational) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("0.45"), Rational(9, 20));
    EXPECT_EQ(parse_rational("-1e-3"), Rational(-1, 1000));
    EXPECT_EQ(parse_rational_list("1/2, 3/7"), (std::vector<Rational>{Rational(1, 2), Rational(3, 7)}));
    EXPECT_EQ(parse_rational("010/4"), Rational(5, 2));
    EXPECT_THROW(parse_rational("x/2"), Error);
    EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(PolyCore, Proportional) {
    Rational lambda;
    EXPECT_TRUE(proportional(mono({4, -6, 2}), mono({2, -3, 1}), &lambda));
    EXPECT_EQ(lambda, 2);
    EXPECT_FALSE(proportional(mono({4, -6, 2}), mono({2, -3, 2})));
    EXPECT_FALSE(proportional(Polynomial::zero(2), mono({2, -3, 2})));
}
