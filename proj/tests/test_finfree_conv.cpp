#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace finfree;

namespace {

Polynomial mono(std::vector<Rational> c) { return Polynomial::from_monomial(c); }

}  // namespace

TEST(FinFreeConv, MultiplicativeSmallExample) {
    // e_1 = 2*3/2, e_2 = 1*2/1
    EXPECT_EQ(mult_conv(mono({1, -2, 1}), mono({2, -3, 1}), 2), mono({2, -3, 1}));
}

TEST(FinFreeConv, AdditiveSmallExamples) {
    EXPECT_EQ(add_conv(mono({2, -3, 1}), mono({0, 0, 1}), 2), mono({2, -3, 1}));
    EXPECT_EQ(add_conv(Polynomial::linear_power(3, 1), Polynomial::linear_power(3, 2), 3),
              Polynomial::linear_power(3, 3));
}

TEST(FinFreeConv, MatchesPermutationAverages) {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 6; ++n) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto a = oracle::random_roots(rng, n);
            const auto b = oracle::random_roots(rng, n);
            const Polynomial p = Polynomial::from_roots(a), q = Polynomial::from_roots(b);
            EXPECT_EQ(add_conv(p, q, n).monomial(), oracle::additive_by_permutations(a, b));
            EXPECT_EQ(mult_conv(p, q, n).monomial(), oracle::multiplicative_by_permutations(a, b));
        }
    }
}

TEST(FinFreeConv, MultiplicationByLinearPowerDilates) {
    std::mt19937_64 rng(22);
    for (int n = 1; n <= 8; ++n) {
        const Polynomial p = oracle::random_poly(rng, n);
        EXPECT_EQ(mult_conv(p, Polynomial::linear_power(n, 3), n), dilate(p, 3));
    }
}

TEST(FinFreeConv, AdditionOfLinearPowerShifts) {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 8; ++n) {
        const Polynomial p = oracle::random_poly(rng, n);
        EXPECT_EQ(add_conv(p, Polynomial::linear_power(n, -2), n), shift(p, -2));
    }
}

TEST(FinFreeConv, DilationDistributes) {
    std::mt19937_64 rng(24);
    for (int draw = 0; draw < 10; ++draw) {
        const Polynomial p = oracle::random_poly(rng, 5), q = oracle::random_poly(rng, 5);
        EXPECT_TRUE(check_identity_dilation_distribute(p, q, 5, 2));
        EXPECT_TRUE(check_identity_dilation_distribute(p, q, 5, 1));
        EXPECT_TRUE(check_identity_dilation_additive(p, q, 5, 2));
        EXPECT_TRUE(check_identity_dilation_additive(p, q, 5, Rational(-5, 3)));
    }
}

TEST(FinFreeConv, BilinearCommutativeAssociative) {
    std::mt19937_64 rng(25);
    for (int n = 1; n <= 8; ++n) {
        const Polynomial p = oracle::random_poly(rng, n), q = oracle::random_poly(rng, n),
                         r = oracle::random_poly(rng, n);
        const Rational a = oracle::random_rational(rng);
        EXPECT_EQ(mult_conv(a * p + q, r, n), a * mult_conv(p, r, n) + mult_conv(q, r, n));
        EXPECT_EQ(add_conv(a * p + q, r, n), a * add_conv(p, r, n) + add_conv(q, r, n));
        EXPECT_EQ(mult_conv(p, q, n), mult_conv(q, p, n));
        EXPECT_EQ(add_conv(p, q, n), add_conv(q, p, n));
        EXPECT_EQ(mult_conv(mult_conv(p, q, n), r, n), mult_conv(p, mult_conv(q, r, n), n));
        EXPECT_EQ(add_conv(add_conv(p, q, n), r, n), add_conv(p, add_conv(q, r, n), n));
    }
}

TEST(FinFreeConv, AdditiveZeroExactlyWhenDegreesTooSmall) {
    const int n = 5;
    for (int dp = 0; dp <= n; ++dp) {
        for (int dq = 0; dq <= n; ++dq) {
            std::vector<Rational> a(dp + 1, Rational(1)), b(dq + 1, Rational(2));
            const Polynomial p = Polynomial::from_monomial(a, n), q = Polynomial::from_monomial(b, n);
            const Polynomial s = add_conv(p, q, n);
            EXPECT_EQ(s.n(), n);
            EXPECT_EQ(s.is_zero(), dp + dq < n) << dp << " " << dq;
        }
    }
}

TEST(FinFreeConv, RejectsMismatchAndFloats) {
    const Polynomial p = mono({2, -3, 1});
    try {
        mult_conv(p, mono({1, 1}), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
    }
    try {
        add_conv(p.to_float(128), p, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FloatBackend);
    }
}
