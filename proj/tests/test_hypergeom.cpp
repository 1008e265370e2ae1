#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"
#include "finfree/hypergeom.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace finfree;

namespace {

Polynomial mono(std::vector<Rational> c) { return Polynomial::from_monomial(c); }

HypergeometricSpec spec(int n, std::vector<Rational> a, std::vector<Rational> b, int sign = 0) {
    HypergeometricSpec s;
    s.n = n;
    s.a = std::move(a);
    s.b = std::move(b);
    s.sign = sign;
    return s;
}

std::vector<Rational> random_tuple(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::vector<Rational> t(len(rng));
    for (auto& x : t) x = oracle::random_noninteger(rng, -5, 5);
    return t;
}

HypergeometricSpec random_spec(std::mt19937_64& rng, int n, bool any_sign) {
    std::uniform_int_distribution<int> bit(0, 1);
    return spec(n, random_tuple(rng, 2), random_tuple(rng, 2), any_sign ? bit(rng) : 0);
}

Rational poch(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
}

Rational poch(const std::vector<Rational>& t, int k) {
    Rational r = 1;
    for (const auto& x : t) r *= poch(x, k);
    return r;
}

// Brute-force double sum for r = 2, monomial coefficients in x.
std::vector<Rational> kdf_two_variable_oracle(const KdFSpec& s, bool one_variable) {
    const int n = s.n;
    std::vector<Rational> c(n + 1);
    for (int l1 = 0; l1 <= n; ++l1) {
        for (int l2 = 0; l1 + l2 <= n; ++l2) {
            const int k = l1 + l2;
            Rational t = poch(Rational(-n), k) * poch(s.a0, k) / poch(s.b0, k);
            t *= poch(s.a[0], l1) / poch(s.b[0], l1) * ipow(s.c[0], l1) / factorial(l1);
            t *= poch(s.a[1], l2) / poch(s.b[1], l2) * ipow(s.c[1], l2) / factorial(l2);
            c[one_variable ? l1 : k] += t;
        }
    }
    return c;
}

KdFSpec random_kdf(std::mt19937_64& rng, int n, int r) {
    KdFSpec s;
    s.n = n;
    s.a0 = random_tuple(rng, 2);
    s.b0 = random_tuple(rng, 2);
    for (int l = 0; l < r; ++l) {
        s.a.push_back(random_tuple(rng, 2));
        s.b.push_back(random_tuple(rng, 2));
        Rational c = oracle::random_rational(rng);
        if (c == 0) c = Rational(3, 2);
        s.c.push_back(c);
    }
    return s;
}

}  // namespace

TEST(Hypergeom, Pochhammer) {
    EXPECT_EQ(rising(3, 2), 12);
    EXPECT_EQ(rising(Rational(7, 3), 0), 1);
    EXPECT_EQ(falling(5, 2), 20);
    EXPECT_EQ(falling(Rational(1, 2), 3), Rational(3, 8));
}

TEST(Hypergeom, SmallExpansions) {
    const auto f21 = oracle::hypergeometric_terms(2, {3}, {1}, 1);
    EXPECT_EQ(f21, (std::vector<Rational>{1, -6, 6}));
    EXPECT_EQ(hyper_poly(spec(2, {3}, {1})), mono(f21));

    const auto f11 = oracle::hypergeometric_terms(2, {}, {1}, 1);
    EXPECT_EQ(f11, (std::vector<Rational>{1, -2, Rational(1, 2)}));
    EXPECT_EQ(hyper_poly(spec(2, {}, {1})), mono(f11));

    for (int n = 0; n <= 6; ++n) EXPECT_EQ(hyper_poly(spec(n, {}, {})), Polynomial::linear_power(n, 1).scaled(n % 2 ? -1 : 1));
}

TEST(Hypergeom, MatchesTermwiseOracle) {
    std::mt19937_64 rng(31);
    for (int draw = 0; draw < 30; ++draw) {
        const int n = 1 + draw % 8;
        const HypergeometricSpec s = random_spec(rng, n, true);
        const Rational z = s.sign ? Rational(-1) : Rational(1);
        EXPECT_EQ(hyper_poly(s), mono(oracle::hypergeometric_terms(n, s.a, s.b, z)).with_ambient(n));
    }
}

TEST(Hypergeom, AffineArgument) {
    HypergeometricSpec s = spec(3, {Rational(1, 2)}, {Rational(5, 3)}, 1);
    s.scale = Rational(2, 3);
    s.shift = Rational(-1, 4);
    const Polynomial base = hyper_poly(spec(3, {Rational(1, 2)}, {Rational(5, 3)}));
    const Polynomial p = hyper_poly(s);
    for (int i = -3; i <= 3; ++i) {
        const Rational x(i, 2);
        EXPECT_EQ(evaluate(p, x), evaluate(base, -(s.scale * x + s.shift)));
    }
}

TEST(Hypergeom, AdmissibilityAndDegree) {
    EXPECT_THROW(hyper_poly(spec(3, {}, {-2})), Error);
    EXPECT_THROW(hyper_poly(spec(3, {}, {0})), Error);
    EXPECT_NO_THROW(hyper_poly(spec(3, {}, {-4})));
    EXPECT_FALSE(full_degree(spec(3, {-1}, {1})));
    EXPECT_EQ(hyper_poly(spec(3, {-1}, {1})).degree(), 1);
    EXPECT_TRUE(full_degree(spec(3, {-3}, {1})));
    EXPECT_EQ(hyper_poly(spec(3, {Rational(1, 2)}, {1})).degree(), 3);
}

TEST(Hypergeom, DerivativeExample) {
    const HypergeometricSpec d = hyper_derivative(spec(2, {3}, {1}));
    EXPECT_EQ(d.n, 1);
    EXPECT_EQ(hyper_poly(d), mono({1, -2}));
    EXPECT_EQ(hyper_poly(spec(2, {3}, {1})).derivative(), mono({-6, 12}));
    EXPECT_EQ(hyper_poly(hyper_derivative(spec(1, {3}, {2}))).degree(), 0);
    EXPECT_THROW(hyper_derivative(spec(0, {}, {})), Error);
}

TEST(Hypergeom, DerivativeProportionalRandom) {
    std::mt19937_64 rng(32);
    for (int draw = 0; draw < 30; ++draw) {
        HypergeometricSpec s = random_spec(rng, 1 + draw % 8, true);
        s.scale = oracle::random_rational(rng) + Rational(1, 3);
        s.shift = oracle::random_rational(rng);
        if (s.scale == 0) s.scale = 2;
        EXPECT_TRUE(proportional(hyper_poly(s).derivative(), hyper_poly(hyper_derivative(s))));
    }
}

// Under the signed coefficient convention both sides agree up to (-1)^n:
// e_n of each factor is (-1)^n while e_n of the product is e_n(p) e_n(q).
TEST(Hypergeom, MultiplicativeConcatenatesParameters) {
    const HypergeometricSpec s1 = spec(4, {3}, {1}), s2 = spec(4, {Rational(5, 2)}, {Rational(7, 3)});
    const HypergeometricSpec r = hyper_mult_conv(s1, s2);
    EXPECT_EQ(r.a.size(), 2u);
    EXPECT_EQ(hyper_poly(r), mult_conv(hyper_poly(s1), hyper_poly(s2), 4));

    const HypergeometricSpec u = spec(5, {}, {2}), v = spec(5, {}, {3});
    EXPECT_EQ(mult_conv(hyper_poly(u), hyper_poly(v), 5).scaled(-1).monomial(),
              oracle::hypergeometric_terms(5, {}, {2, 3}, 1));

    // (1-x)^n is the unit up to sign
    const HypergeometricSpec unit = spec(4, {}, {});
    EXPECT_TRUE(proportional(hyper_poly(hyper_mult_conv(s1, unit)), hyper_poly(s1)));

    std::mt19937_64 rng(33);
    for (int draw = 0; draw < 40; ++draw) {
        const int n = 1 + draw % 8;
        const HypergeometricSpec a = random_spec(rng, n, false), b = random_spec(rng, n, false);
        EXPECT_EQ(hyper_poly(hyper_mult_conv(a, b)).scaled(n % 2 ? -1 : 1),
                  mult_conv(hyper_poly(a), hyper_poly(b), n));
    }
    EXPECT_THROW(hyper_mult_conv(spec(3, {}, {}), spec(4, {}, {})), Error);
}

TEST(Hypergeom, AdditiveOperatorForm) {
    EXPECT_TRUE(additive_hg_verify(spec(4, {}, {2}), spec(4, {}, {3}, 1)));
    EXPECT_TRUE(additive_hg_verify(spec(4, {}, {2}), std::nullopt));
    EXPECT_TRUE(additive_hg_verify(spec(3, {2}, {}), spec(3, {1}, {5})));
    std::mt19937_64 rng(34);
    for (int draw = 0; draw < 40; ++draw) {
        const int n = 1 + draw % 8;
        EXPECT_TRUE(additive_hg_verify(random_spec(rng, n, true), random_spec(rng, n, true)));
    }
}

TEST(Hypergeom, OperatorOnPowerMatchesReciprocalFormula) {
    // q(d)[x^n] = sum_k (-1)^k (n)_{n-k} e_k(q) x^k
    std::mt19937_64 rng(35);
    for (int n = 1; n <= 7; ++n) {
        const Polynomial q = oracle::random_poly(rng, n);
        const Polynomial got = apply_symbol_to_power(q.monomial(), n);
        std::vector<Rational> want(n + 1);
        for (int k = 0; k <= n; ++k) want[k] = (k % 2 ? -1 : 1) * falling(n, n - k) * q.e(k);
        EXPECT_EQ(got.monomial(), want);
        const Polynomial f20 = hyper_poly_unchecked(n, {1}, {}, 1);
        EXPECT_EQ(mult_conv(f20, got, n), reverse(q).scaled(factorial(n) * (n % 2 ? -1 : 1)));
    }
}

TEST(Hypergeom, ReversedProductRepresentation) {
    const HypergeometricSpec single = spec(4, {Rational(1, 2)}, {Rational(7, 3)});
    EXPECT_TRUE(proportional(reversed_product_representation(single, std::nullopt),
                             reverse(symbol_product_polynomial(single, std::nullopt))));
    const HypergeometricSpec u = spec(3, {}, {Rational(3, 2)}), v = spec(3, {}, {Rational(-5, 2)}, 1);
    EXPECT_TRUE(proportional(reversed_product_representation(u, v), reverse(symbol_product_polynomial(u, v))));

    std::mt19937_64 rng(36);
    for (int draw = 0; draw < 40; ++draw) {
        const int n = 1 + draw % 8;
        const HypergeometricSpec a = random_spec(rng, n, true), b = random_spec(rng, n, true);
        if (symbol_product_polynomial(a, b).degree() < n) continue;
        EXPECT_TRUE(proportional(reversed_product_representation(a, b), reverse(symbol_product_polynomial(a, b))));
    }

    try {
        reversed_product_representation(spec(1, {}, {2}), spec(1, {}, {2}, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeDeficient);
    }
}

TEST(Hypergeom, KdFSingleVariableReducesToHypergeometric) {
    KdFSpec s;
    s.n = 3;
    s.a0 = {Rational(1, 2)};
    s.b0 = {Rational(4, 3)};
    s.a = {{Rational(-7, 2)}};
    s.b = {{Rational(5, 2), Rational(2, 5)}};
    s.c = {1};
    const Polynomial merged = hyper_poly(spec(3, {Rational(1, 2), Rational(-7, 2)}, {Rational(4, 3), Rational(5, 2), Rational(2, 5)}));
    EXPECT_EQ(kdf_poly(s, KdFMode::AllScaled), merged);
    EXPECT_EQ(kdf_poly(s, KdFMode::OneVariable), merged);
}

TEST(Hypergeom, KdFTwoVariableBruteForce) {
    KdFSpec s;
    s.n = 2;
    s.b0 = {1};
    s.a = {{}, {}};
    s.b = {{}, {}};
    s.c = {1, 1};
    EXPECT_EQ(kdf_poly(s, KdFMode::AllScaled).monomial(), kdf_two_variable_oracle(s, false));
    std::mt19937_64 rng(37);
    for (int draw = 0; draw < 20; ++draw) {
        const KdFSpec t = random_kdf(rng, 1 + draw % 6, 2);
        EXPECT_EQ(kdf_poly(t, KdFMode::AllScaled).monomial(), kdf_two_variable_oracle(t, false));
        EXPECT_EQ(kdf_poly(t, KdFMode::OneVariable).monomial(), kdf_two_variable_oracle(t, true));
    }
}

TEST(Hypergeom, KdFFactorizations) {
    std::mt19937_64 rng(38);
    for (int draw = 0; draw < 60; ++draw) {
        const int r = 1 + draw % 3;
        const int n = 1 + (draw / 3) % 5;
        const KdFSpec s = random_kdf(rng, n, r);
        for (KdFMode mode : {KdFMode::AllScaled, KdFMode::OneVariable}) {
            const KdFFactorization f = kdf_factorize(s, mode);
            ASSERT_NE(f.scalar, 0);
            EXPECT_EQ(kdf_poly(s, mode), f.tree.evaluate().scaled(f.scalar)) << f.tree.describe();
        }
    }
}

TEST(Hypergeom, KdFTreeShapes) {
    std::mt19937_64 rng(39);
    const KdFSpec one = random_kdf(rng, 3, 1);
    const KdFFactorization f = kdf_factorize(one, KdFMode::AllScaled);
    ASSERT_EQ(f.tree.kind, ConvExpr::Kind::Reverse);
    EXPECT_EQ(f.tree.children[0].kind, ConvExpr::Kind::Mult);
    const KdFFactorization g = kdf_factorize(random_kdf(rng, 3, 2), KdFMode::OneVariable);
    ASSERT_EQ(g.tree.kind, ConvExpr::Kind::Mult);
    EXPECT_EQ(g.tree.children[1].kind, ConvExpr::Kind::Add);
    KdFSpec bad = one;
    bad.c[0] = 0;
    EXPECT_THROW(kdf_factorize(bad, KdFMode::AllScaled), Error);
}

TEST(Hypergeom, KdFReciprocalRelation) {
    KdFSpec s;
    s.n = 3;
    s.a0 = {Rational(1, 2)};
    s.b0 = {Rational(-7, 3)};
    s.a = {{Rational(5, 4), Rational(2, 7)}, {Rational(-3, 2)}};
    s.b = {{}, {Rational(9, 5)}};
    s.c = {Rational(3, 2), Rational(-2, 5)};
    const auto [lhs, rhs] = kdf_reciprocal_pair(s, false);
    EXPECT_TRUE(proportional(lhs, rhs));
    // With the remaining arguments taken as +c_l/c_1 the relation does not hold.
    const auto [lhs2, rhs2] = kdf_reciprocal_pair(s, true);
    EXPECT_FALSE(proportional(lhs2, rhs2));
}
