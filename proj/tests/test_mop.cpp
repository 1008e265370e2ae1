#include "finfree/error.hpp"
#include "finfree/hypergeom.hpp"
#include "finfree/mop.hpp"
#include "finfree/roots_measure.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <random>

using namespace finfree;

namespace {

Rational poch(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
}

// Gamma(x) / Gamma(y) for x - y an integer.
Rational gamma_quot(const Rational& x, const Rational& y) {
    const Rational d = x - y;
    const int k = static_cast<int>(numerator(d));
    return k >= 0 ? poch(y, k) : 1 / poch(x, -k);
}

Rational fact(int k) { return poch(Rational(1), k); }

MopSpec jp(std::vector<Rational> alpha, Rational beta, MopFamily f) {
    MopSpec s;
    s.family = f;
    s.alpha = std::move(alpha);
    s.beta = beta;
    return s;
}

MopSpec ml2(Rational alpha, std::vector<Rational> c, MopFamily f) {
    MopSpec s;
    s.family = f;
    s.alpha = {alpha};
    s.c = std::move(c);
    return s;
}

// Exact integrals of x^k Q_n against the weights, using Beta/Gamma ratios
// so that every quantity stays rational. Index k runs 0..|n|-1.
std::vector<Rational> jp_typeI_exact_moments(const MopSpec& s, const MultiIndex& n) {
    const int N = total(n), r = s.r();
    std::vector<Rational> I(N);
    for (int j = 0; j < r; ++j) {
        if (n[j] == 0) continue;
        const auto f = jp_typeI(s, n, j + 1).monomial();
        Rational R = 1;
        for (int k = 0; k < r; ++k) R *= poch(s.alpha[k] + s.beta + N, n[k]);
        Rational den = fact(n[j] - 1);
        for (int k = 0; k < r; ++k)
            if (k != j) den *= poch(s.alpha[k] - s.alpha[j], n[k]);
        R /= den;
        if ((N - 1) % 2) R = -R;
        const Rational gb = 1 / poch(s.beta + 1, N - 1);  // Gamma(beta+1)/Gamma(beta+N)
        for (int k = 0; k < N; ++k)
            for (std::size_t m = 0; m < f.size(); ++m) {
                const int e = k + static_cast<int>(m);
                I[k] += R * f[m] * poch(s.alpha[j] + 1, e) *
                        gamma_quot(s.alpha[j] + s.beta + N, s.alpha[j] + s.beta + e + 2) * gb;
            }
    }
    return I;
}

std::vector<Rational> ml1_typeI_exact_moments(const MopSpec& s, const MultiIndex& n) {
    const int N = total(n), r = s.r();
    std::vector<Rational> I(N);
    for (int j = 0; j < r; ++j) {
        if (n[j] == 0) continue;
        const auto f = ml1_typeI(s, n, j + 1).monomial();
        Rational den = fact(n[j] - 1);
        for (int k = 0; k < r; ++k)
            if (k != j) den *= poch(s.alpha[k] - s.alpha[j], n[k]);
        Rational R = 1 / den;
        if ((N - 1) % 2) R = -R;
        for (int k = 0; k < N; ++k)
            for (std::size_t m = 0; m < f.size(); ++m) I[k] += R * f[m] * poch(s.alpha[j] + 1, k + static_cast<int>(m));
    }
    return I;
}

// Type II: the integral of P x^k w_j divided by the weight's k-th moment.
Rational jp_typeII_exact(const Polynomial& P, const Rational& a, const Rational& beta, int k) {
    const auto p = P.monomial();
    Rational s = 0;
    for (std::size_t m = 0; m < p.size(); ++m)
        s += p[m] * poch(a + k + 1, static_cast<int>(m)) / poch(a + k + beta + 2, static_cast<int>(m));
    return s;
}

Rational laguerre_exact(const Polynomial& P, const Rational& a, const Rational& c, int k) {
    const auto p = P.monomial();
    Rational s = 0, cm = 1;
    for (std::size_t m = 0; m < p.size(); ++m) {
        s += p[m] * poch(a + k + 1, static_cast<int>(m)) / cm;
        cm *= c;
    }
    return s;
}

// Ordered alpha_1 > ... > alpha_r > -1 with non-integer differences.
std::vector<Rational> ordered_alphas(std::mt19937_64& rng, int r) {
    for (;;) {
        std::vector<Rational> a(r);
        for (auto& x : a) x = oracle::random_noninteger(rng, -1, 2);
        std::sort(a.begin(), a.end(), [](const Rational& x, const Rational& y) { return x > y; });
        bool ok = true;
        for (int j = 0; j < r && ok; ++j)
            for (int k = 0; k < j && ok; ++k)
                if (denominator(Rational(a[j] - a[k])) == 1) ok = false;
        if (ok) return a;
    }
}

MultiIndex random_index(std::mt19937_64& rng, int r, int max_total) {
    std::uniform_int_distribution<int> d(1, std::max(1, max_total / r));
    MultiIndex n(r);
    for (auto& v : n) v = d(rng);
    return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Type I constructors

TEST(JpTypeI, SingleWeightIsGaussPolynomial) {
    const auto s = jp({Rational(1, 2)}, 1, MopFamily::JP1);
    const auto p = jp_typeI(s, {3}, 1);
    const Rational a = Rational(1, 2);
    EXPECT_EQ(p.monomial(), oracle::hypergeometric_terms(2, {a + 1 + 3}, {a + 1}, 1));
}

TEST(JpTypeI, UnitComponentIsConstant) {
    const auto s = jp({Rational(1, 2), Rational(3, 7)}, 1, MopFamily::JP1);
    EXPECT_EQ(jp_typeI(s, {1, 4}, 1).degree(), 0);
    EXPECT_EQ(ml1_typeI(s, {4, 1}, 2).degree(), 0);
}

TEST(JpTypeI, BlocksGiveTheComponent) {
    const auto s = jp({Rational(1, 2), Rational(3, 7)}, 1, MopFamily::JP1);
    for (int i = 1; i <= 2; ++i) {
        const auto p = jp_typeI(s, {3, 4}, i);
        EXPECT_EQ(p.degree(), (i == 1 ? 3 : 4) - 1);
        EXPECT_TRUE(proportional(p, jp_typeI_decomposition(s, {3, 4}, i)));
    }
}

TEST(JpTypeI, DecompositionsOnRandomDraws) {
    std::mt19937_64 rng(11);
    for (int draw = 0; draw < 30; ++draw) {
        const int r = 1 + draw % 3;
        const auto alpha = ordered_alphas(rng, r);
        const Rational beta = oracle::random_noninteger(rng, -1, 3);
        const auto n = random_index(rng, r, 9);
        const auto s = jp(alpha, beta, MopFamily::JP1);
        auto l = s;
        l.family = MopFamily::ML11;
        for (int i = 1; i <= r; ++i) {
            EXPECT_TRUE(proportional(jp_typeI(s, n, i), jp_typeI_decomposition(s, n, i)));
            EXPECT_TRUE(proportional(ml1_typeI(l, n, i), ml1_typeI_decomposition(l, n, i)));
            if (n[i - 1] > 1) EXPECT_TRUE(proportional(ml1_typeI(l, n, i), ml1_typeI_bridge(l, n, i)));
        }
    }
}

TEST(JpTypeI, ExactOrthogonalityAndUnitNormalization) {
    std::mt19937_64 rng(5);
    for (int draw = 0; draw < 20; ++draw) {
        const int r = 1 + draw % 3;
        const auto s = jp(ordered_alphas(rng, r), oracle::random_noninteger(rng, -1, 3), MopFamily::JP1);
        const auto n = random_index(rng, r, 8);
        const auto I = jp_typeI_exact_moments(s, n);
        for (int k = 0; k + 1 < total(n); ++k) EXPECT_EQ(I[k], 0) << "k=" << k;
        EXPECT_EQ(I.back(), 1);
    }
}

TEST(Ml1TypeI, ExactOrthogonalityAndUnitNormalization) {
    std::mt19937_64 rng(6);
    for (int draw = 0; draw < 20; ++draw) {
        const int r = 1 + draw % 3;
        const auto s = jp(ordered_alphas(rng, r), 0, MopFamily::ML11);
        const auto n = random_index(rng, r, 8);
        const auto I = ml1_typeI_exact_moments(s, n);
        for (int k = 0; k + 1 < total(n); ++k) EXPECT_EQ(I[k], 0) << "k=" << k;
        EXPECT_EQ(I.back(), 1);
    }
}

TEST(Ml1TypeI, BridgeFromJacobiPineiro) {
    const auto s = jp({Rational(1, 2), Rational(3, 7)}, Rational(2, 3), MopFamily::ML11);
    for (int i = 1; i <= 2; ++i) EXPECT_TRUE(proportional(ml1_typeI(s, {3, 3}, i), ml1_typeI_bridge(s, {3, 3}, i)));
}

TEST(Ml2TypeI, SingleWeightShape) {
    const auto s = ml2(Rational(1, 2), {Rational(3, 2)}, MopFamily::ML21);
    const auto p = ml2_typeI(s, {4}, 1);
    EXPECT_EQ(p.monomial(), oracle::hypergeometric_terms(3, {}, {Rational(1, 2) + 1 + 4 - 4}, Rational(3, 2)));
}

// ---------------------------------------------------------------------------
// Type II constructors

TEST(JpTypeII, DecompositionMatchesDirect) {
    const auto s = jp({Rational(1, 2), Rational(3, 7)}, 1, MopFamily::JP2);
    const auto direct = jp_typeII(s, {2, 2});
    EXPECT_EQ(direct.degree(), 4);
    EXPECT_EQ(jp_typeII(s, {2, 2}, TypeIIPath::Decomposition), direct);
    const auto b1 = jp_typeII_blocks(s, {2, 2}, false), b2 = jp_typeII_blocks(s, {2, 2}, true);
    ASSERT_EQ(b1.size(), 2u);
    // the two forms differ by the Pochhammer prefactor only (Euler transformation)
    const std::vector<Rational> a{Rational(1, 2), Rational(3, 7)};
    for (int j = 0; j < 2; ++j) EXPECT_EQ(b1[j], (poch(a[j] + 1, 2) / fact(2)) * b2[j]);
}

TEST(JpTypeII, ReversedMatchesDirect) {
    for (const Rational beta : {Rational(1, 2), Rational(1), Rational(7, 3)}) {
        const auto s = jp({Rational(1, 2), Rational(3, 7)}, beta, MopFamily::JP2);
        EXPECT_EQ(jp_typeII(s, {2, 2}, TypeIIPath::Reversed), jp_typeII(s, {2, 2})) << to_string(beta);
    }
}

TEST(JpTypeII, NonIntegerBetaRejectedOnBlockPath) {
    const auto s = jp({Rational(1, 2), Rational(3, 7)}, Rational(1, 2), MopFamily::JP2);
    try {
        jp_typeII(s, {2, 2}, TypeIIPath::Decomposition);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonIntegerBetaPath);
    }
}

TEST(JpTypeII, ExactOrthogonalityOnRandomDraws) {
    std::mt19937_64 rng(7);
    for (int draw = 0; draw < 30; ++draw) {
        const int r = 1 + draw % 3;
        auto alpha = ordered_alphas(rng, r);
        std::shuffle(alpha.begin(), alpha.end(), rng);
        const Rational beta = draw % 2 ? Rational(draw % 4) : oracle::random_noninteger(rng, -1, 3);
        const auto s = jp(alpha, beta, MopFamily::JP2);
        const auto n = random_index(rng, r, 9);
        const auto P = jp_typeII(s, n);
        ASSERT_EQ(P.degree(), total(n));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < n[j]; ++k) EXPECT_EQ(jp_typeII_exact(P, alpha[j], beta, k), 0);
        if (denominator(beta) == 1) EXPECT_EQ(jp_typeII(s, n, TypeIIPath::Decomposition), P);
        EXPECT_EQ(jp_typeII(s, n, TypeIIPath::Reversed), P);
    }
}

TEST(Ml1TypeII, SingleWeightIsClassicalLaguerre) {
    const Rational a = Rational(2, 5);
    const auto s = jp({a}, 0, MopFamily::ML12);
    const auto L = ml1_typeII(s, {3});
    // (-1)^n n! L_n^{(a)}(x) = sum_k (-1)^{n-k} n! C(n+a, n-k) x^k / k!
    std::vector<Rational> c(4);
    for (int k = 0; k <= 3; ++k) {
        Rational binom = 1;
        for (int i = 0; i < 3 - k; ++i) binom *= (a + k + 1 + i) / (i + 1);
        c[k] = ((3 - k) % 2 ? -1 : 1) * fact(3) * binom / fact(k);
    }
    EXPECT_EQ(L.monomial(), c);
    for (const auto& z : sorted_real_zeros(L, 256, Real(1e-20))) EXPECT_GT(z, 0);
}

TEST(Ml1TypeII, ReversedMatchesDirectAndOrthogonal) {
    std::mt19937_64 rng(8);
    for (int draw = 0; draw < 30; ++draw) {
        const int r = 1 + draw % 3;
        const auto alpha = ordered_alphas(rng, r);
        const auto s = jp(alpha, 0, MopFamily::ML12);
        const auto n = random_index(rng, r, 9);
        const auto L = ml1_typeII(s, n);
        ASSERT_EQ(L.degree(), total(n));
        EXPECT_EQ(ml1_typeII(s, n, TypeIIPath::Reversed), L);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < n[j]; ++k) EXPECT_EQ(laguerre_exact(L, alpha[j], 1, k), 0);
    }
}

TEST(Ml2TypeII, FactorizationsMatchDirect) {
    const auto s = ml2(Rational(1, 2), {1, 2}, MopFamily::ML22);
    const auto L = ml2_typeII(s, {2, 2});
    EXPECT_EQ(L.degree(), 4);
    EXPECT_EQ(L.leading(), 1);
    EXPECT_EQ(ml2_typeII(s, {2, 2}, TypeIIPath::FactorizationBis), L);
    EXPECT_EQ(ml2_typeII(s, {2, 2}, TypeIIPath::Decomposition), L);
}

TEST(Ml2TypeII, ExactOrthogonalityOnRandomDraws) {
    std::mt19937_64 rng(9);
    for (int draw = 0; draw < 30; ++draw) {
        const int r = 1 + draw % 3;
        std::vector<Rational> c;
        while (static_cast<int>(c.size()) < r) {
            const Rational v(std::uniform_int_distribution<int>(1, 12)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
            if (std::find(c.begin(), c.end(), v) == c.end()) c.push_back(v);
        }
        const Rational a = oracle::random_noninteger(rng, -1, 3);
        const auto s = ml2(a, c, MopFamily::ML22);
        const auto n = random_index(rng, r, 9);
        const auto L = ml2_typeII(s, n);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < n[j]; ++k) EXPECT_EQ(laguerre_exact(L, a, c[j], k), 0);
        // both factorizations reproduce L up to the sign (-1)^{|n|}
        const Rational sign = total(n) % 2 ? -1 : 1;
        EXPECT_EQ(ml2_typeII(s, n, TypeIIPath::FactorizationBis), sign * L);
        EXPECT_EQ(ml2_typeII(s, n, TypeIIPath::Decomposition), sign * L);
    }
}

TEST(MopSpec, Validation) {
    auto expect_code = [](auto&& fn, ErrorCode code) {
        try {
            fn();
            ADD_FAILURE() << "no error";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), code);
        }
    };
    expect_code([] { ml2_typeII(ml2(Rational(1, 2), {1, 1}, MopFamily::ML22), {2, 2}); }, ErrorCode::DuplicateC);
    expect_code([] { jp_typeII(jp({Rational(1, 2), Rational(3, 2)}, 1, MopFamily::JP2), {2, 2}); },
                ErrorCode::InvalidParameters);
    expect_code([] { jp_typeI(jp({Rational(1, 2)}, -2, MopFamily::JP1), {2}, 1); }, ErrorCode::InvalidParameters);
    expect_code([] { jp_typeI(jp({Rational(1, 2), Rational(1, 3)}, 1, MopFamily::JP1), {2, 0}, 2); },
                ErrorCode::InvalidParameters);
}

// ---------------------------------------------------------------------------
// Quadrature

TEST(Gauss, JacobiMomentRatios) {
    const Rational a = Rational(1, 2), b = Rational(3, 7);
    const auto rule = gauss_jacobi01(a, b, 20, 256);
    PrecisionGuard guard(256);
    Real mass = 0;
    for (const auto& w : rule.weights) mass += w;
    EXPECT_NEAR(static_cast<double>(mass), boost::math::beta(1.5, 1.0 + 3.0 / 7.0), 1e-14);
    for (int m = 1; m < 40; ++m) {
        Real s = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * pow(rule.nodes[i], m);
        const Real expect = to_real(poch(a + 1, m) / poch(a + b + 2, m));
        EXPECT_LT(abs(s / mass - expect), Real(1e-60)) << m;
    }
}

TEST(Gauss, LaguerreMomentRatios) {
    const Rational a = Rational(-1, 3), c = Rational(5, 2);
    const auto rule = gauss_laguerre(a, c, 18, 256);
    PrecisionGuard guard(256);
    Real mass = 0;
    for (const auto& w : rule.weights) mass += w;
    EXPECT_NEAR(static_cast<double>(mass), std::tgamma(2.0 / 3.0) / std::pow(2.5, 2.0 / 3.0), 1e-14);
    for (int m = 1; m < 36; ++m) {
        Real s = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * pow(rule.nodes[i], m);
        const Real expect = to_real(poch(a + 1, m) / ipow(c, m));
        EXPECT_LT(abs(s / mass / expect - 1), Real(1e-60)) << m;
    }
}

TEST(Orthogonality, AllFamiliesSmallIndices) {
    const Real tol("1e-25");
    const std::vector<Rational> a2{Rational(1, 2), Rational(3, 7)};
    const std::vector<MultiIndex> indices{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {2, 4}};
    std::vector<MopSpec> specs{jp(a2, 1, MopFamily::JP1),  jp(a2, Rational(1, 3), MopFamily::JP2),
                               jp(a2, 0, MopFamily::ML11), jp(a2, 0, MopFamily::ML12),
                               ml2(Rational(1, 2), {1, 2}, MopFamily::ML21),
                               ml2(Rational(1, 2), {1, 2}, MopFamily::ML22)};
    for (const auto& s : specs)
        for (const auto& n : indices) {
            const auto rep = verify_orthogonality(s, n);
            EXPECT_TRUE(rep.passed(tol)) << family_name(s.family) << " n=(" << n[0] << "," << n[1]
                                         << ") residual=" << to_string(rep.max_residual, 6);
            EXPECT_GE(rep.nodes, 2 * total(n) + 20);
            if (s.family == MopFamily::JP1 || s.family == MopFamily::ML11)
                EXPECT_LT(abs(rep.normalization - 1), Real(1e-60));
        }
}

TEST(Orthogonality, ThreeWeights) {
    const Real tol("1e-25");
    const std::vector<Rational> a3{Rational(4, 3), Rational(1, 2), Rational(-1, 5)};
    for (auto f : {MopFamily::JP1, MopFamily::JP2, MopFamily::ML11, MopFamily::ML12}) {
        const auto rep = verify_orthogonality(jp(a3, Rational(2, 3), f), {2, 2, 2});
        EXPECT_TRUE(rep.passed(tol)) << family_name(f) << " " << to_string(rep.max_residual, 6);
    }
    for (auto f : {MopFamily::ML21, MopFamily::ML22}) {
        const auto rep = verify_orthogonality(ml2(Rational(1, 3), {1, Rational(5, 2), 4}, f), {2, 1, 2});
        EXPECT_TRUE(rep.passed(tol)) << family_name(f) << " " << to_string(rep.max_residual, 6);
    }
}

TEST(Orthogonality, WrongPolynomialIsDetected) {
    // checking against a perturbed weight exponent gives a visible residual
    auto s = jp({Rational(1, 2), Rational(3, 7)}, 1, MopFamily::JP2);
    const auto P = jp_typeII(s, {2, 2});
    const auto rule = gauss_jacobi01(Rational(1, 2) + Rational(1, 10), 1, 30, 256);
    PrecisionGuard guard(256);
    Real sum = 0, mag = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real term = rule.weights[i] * evaluate_real(P, rule.nodes[i]);
        sum += term;
        mag += abs(term);
    }
    EXPECT_GT(abs(sum) / mag, Real(1e-10));
}

TEST(TypeIFunction, SignChangesAndNormalization) {
    const auto s = jp({Rational(1, 2), Rational(3, 7)}, 1, MopFamily::JP1);
    const MultiIndex n{2, 2};
    PrecisionGuard guard(256);
    std::vector<Real> xs;
    for (int k = 1; k < 4000; ++k) xs.push_back(Real(k) / 4000);
    const auto q = typeI_function_eval(s, n, xs);
    EXPECT_GE(sign_changes(q), total(n) - 1);
    const auto rep = verify_orthogonality(s, n);
    EXPECT_TRUE(rep.normalization_ok);

    const auto l = jp({Rational(1, 2), Rational(3, 7)}, 0, MopFamily::ML11);
    xs.clear();
    for (int k = 1; k < 4000; ++k) xs.push_back(Real(k) / 100);
    EXPECT_GE(sign_changes(typeI_function_eval(l, n, xs)), total(n) - 1);
}

TEST(TypeIFunction, SingleWeightIsProduct) {
    const auto s = jp({Rational(1, 2)}, 1, MopFamily::JP1);
    PrecisionGuard guard(256);
    const std::vector<Real> xs{Real("0.25"), Real("0.5")};
    const auto q = typeI_function_eval(s, {3}, xs);
    const Real c = jp_typeI_constant(s, {3}, 1);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Real direct = c * evaluate_real(jp_typeI(s, {3}, 1), xs[k]) * family_weight(s, 0, xs[k]);
        EXPECT_LT(abs(q[k] - direct), Real(1e-70));
    }
    EXPECT_EQ(sign_changes({Real(1), Real(0), Real(-2), Real(3)}), 2);
}

// ---------------------------------------------------------------------------
// Zero theorems

namespace {

void expect_all_hold(const std::vector<TheoremVerdict>& vs) {
    for (const auto& v : vs)
        if (v.hypotheses && !v.informational) EXPECT_TRUE(v.holds) << v.claim << ": " << v.detail;
}

}  // namespace

TEST(ZeroLocation, ReferenceInstance) {
    const auto s = jp({Rational(45, 100), Rational(2, 10)}, 1, MopFamily::JP1);
    for (int i = 1; i <= 2; ++i) {
        const auto vs = theorem_suite_zero_location(s, {3, 4}, i);
        ASSERT_FALSE(vs.empty());
        EXPECT_EQ(vs[0].claim, "zeros in Delta_r");
        EXPECT_TRUE(vs[0].hypotheses);
        EXPECT_TRUE(vs[0].holds) << vs[0].detail;
        expect_all_hold(vs);
        // the opposite monotonicity directions fail on this instance
        for (const auto& v : vs)
            if (v.informational) EXPECT_FALSE(v.holds) << v.claim;
    }
}

TEST(ZeroLocation, HypothesesFalseGuard) {
    const auto s = jp({Rational(5, 2), Rational(1, 3)}, 1, MopFamily::JP1);
    const auto vs = theorem_suite_zero_location(s, {3, 3}, 2);
    for (const auto& v : vs)
        if (v.claim.rfind("weakened", 0) != 0) {
            EXPECT_FALSE(v.hypotheses) << v.claim;
            EXPECT_NE(v.detail.find("hypotheses false"), std::string::npos);
        }
}

TEST(Interlacing, TypeIIReferenceInstances) {
    const std::vector<Rational> a2{Rational(1, 2), Rational(3, 7)};
    for (int i = 1; i <= 2; ++i) {
        expect_all_hold(theorem_suite_interlacing(jp(a2, 1, MopFamily::JP2), {3, 3}, i));
        expect_all_hold(theorem_suite_interlacing(jp(a2, 0, MopFamily::ML12), {3, 3}, i));
    }
    const auto vs = theorem_suite_interlacing(ml2(Rational(1, 2), {1, 2}, MopFamily::ML22), {3, 3}, 1);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_TRUE(vs[0].hypotheses);
    EXPECT_TRUE(vs[0].holds) << vs[0].detail;
}

namespace {

// alpha_1 > ... > alpha_r with alpha_1 - 1 < alpha_r, and n = (m, ..., m, m+1, ..., m+1).
MopSpec nikishin_draw(std::mt19937_64& rng, int r, MopFamily f, MultiIndex& n, int max_total) {
    std::vector<Rational> a;
    for (;;) {
        a.assign(r, Rational(0));
        const Rational base = oracle::random_noninteger(rng, -1, 1);
        a[r - 1] = base;
        for (int j = 0; j + 1 < r; ++j) {
            std::uniform_int_distribution<int> num(1, 11);
            a[j] = base + Rational(num(rng), 12);
        }
        std::sort(a.begin(), a.end(), [](const Rational& x, const Rational& y) { return x > y; });
        bool ok = true;
        for (int j = 0; j < r && ok; ++j)
            for (int k = 0; k < j && ok; ++k) ok = a[j] != a[k];
        if (ok) break;
    }
    std::uniform_int_distribution<int> tot(r, max_total);
    const int N = tot(rng);
    n.assign(r, N / r);
    for (int j = r - N % r; j < r; ++j) ++n[j];
    auto s = jp(a, oracle::random_noninteger(rng, -1, 2), f);
    return s;
}

}  // namespace

TEST(ZeroLocation, RandomStepLineDraws) {
    std::mt19937_64 rng(21);
    for (auto f : {MopFamily::JP1, MopFamily::ML11})
        for (int r = 1; r <= 3; ++r)
            for (int draw = 0; draw < 6; ++draw) {
                MultiIndex n;
                const auto s = nikishin_draw(rng, r, f, n, 9);
                std::uniform_int_distribution<int> comp(1, r);
                const int i = comp(rng);
                if (n[i - 1] < 1) continue;
                const auto vs = theorem_suite_zero_location(s, n, i, Rational(1 + draw % 4, 2));
                EXPECT_TRUE(vs[0].hypotheses) << family_name(f) << " r=" << r;
                expect_all_hold(vs);
            }
}

TEST(Interlacing, RandomTypeIIDraws) {
    std::mt19937_64 rng(22);
    for (int draw = 0; draw < 12; ++draw) {
        const int r = 1 + draw % 3;
        auto alpha = ordered_alphas(rng, r);
        std::shuffle(alpha.begin(), alpha.end(), rng);
        const auto n = random_index(rng, r, 8);
        const int i = 1 + draw % r;
        const Rational t = Rational(1 + draw % 4, 2);
        expect_all_hold(theorem_suite_interlacing(jp(alpha, draw % 3, MopFamily::JP2), n, i, t));
        expect_all_hold(theorem_suite_interlacing(jp(alpha, 0, MopFamily::ML12), n, i, t));
        std::vector<Rational> c;
        for (int j = 0; j < r; ++j) c.push_back(Rational(2 * j + 1, 2));
        expect_all_hold(theorem_suite_interlacing(ml2(alpha[0], c, MopFamily::ML22), n, i, t));
    }
}
