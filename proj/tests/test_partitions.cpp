#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"
#include "finfree/partitions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <complex>

using namespace finfree;

namespace {

// Crossing check on an arbitrary labelled sequence of points.
bool brute_noncrossing(const std::vector<int>& label) {
    const int m = static_cast<int>(label.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int d = c + 1; d < m; ++d)
                    if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return false;
    return true;
}

// Coarsest sigma on the primed points with pi U sigma non-crossing on 1,1',2,2',...
SetPartition brute_kreweras(const SetPartition& pi) {
    const int k = pi.k;
    const SetPartition* best = nullptr;
    int count_best = 0;
    for (const auto& sigma : enumerate_partitions(k)) {
        std::vector<int> label(2 * k);
        for (int b = 0; b < pi.size(); ++b)
            for (int e : pi.blocks[b]) label[2 * (e - 1)] = b;
        for (int b = 0; b < sigma.size(); ++b)
            for (int e : sigma.blocks[b]) label[2 * (e - 1) + 1] = 1000 + b;
        if (!brute_noncrossing(label)) continue;
        if (!best || sigma.size() < best->size()) {
            best = &sigma;
            count_best = 1;
        } else if (sigma.size() == best->size()) {
            ++count_best;
        }
    }
    EXPECT_EQ(count_best, 1);
    return *best;
}

Integer closed_form_mobius_top(int m) {
    Integer f = 1;
    for (int i = 2; i < m; ++i) f *= i;
    return (m % 2 == 1) ? f : Integer(-f);
}

}  // namespace

TEST(Partitions, EnumerationCounts) {
    EXPECT_EQ(enumerate_nc(3).size(), 5u);
    EXPECT_EQ(enumerate_nc(4).size(), 14u);
    EXPECT_EQ(enumerate_partitions(3).size(), 5u);
    EXPECT_EQ(enumerate_partitions(4).size(), 15u);
    // Bell and Catalan numbers
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) {
        EXPECT_EQ(enumerate_partitions(k).size(), bell[k]);
        EXPECT_EQ(enumerate_nc(k).size(), catalan[k]);
    }
    EXPECT_THROW(
        {
            try {
                enumerate_partitions(13);
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), ErrorCode::TooLarge);
                throw;
            }
        },
        Error);
}

TEST(Partitions, NoncrossingMatchesBruteForce) {
    for (int k = 1; k <= 6; ++k)
        for (const auto& p : enumerate_partitions(k)) {
            std::vector<int> label(k);
            for (int b = 0; b < p.size(); ++b)
                for (int e : p.blocks[b]) label[e - 1] = b;
            EXPECT_EQ(is_noncrossing(p), brute_noncrossing(label));
        }
}

TEST(Partitions, MobiusValues) {
    EXPECT_EQ(mobius(finest(1), finest(1)), 1);
    EXPECT_EQ(mobius(finest(2), coarsest(2)), -1);
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(mobius(finest(m), coarsest(m)), closed_form_mobius_top(m));
    EXPECT_THROW(mobius(coarsest(3), finest(3)), Error);
}

TEST(Partitions, MobiusDefiningRecursionAtFour) {
    const auto& all = enumerate_partitions(4);
    for (const auto& s : all)
        for (const auto& p : all) {
            if (!refines(s, p) || s == p) continue;
            Integer sum = 0;
            for (const auto& r : all)
                if (refines(s, r) && refines(r, p)) sum += mobius(s, r);
            EXPECT_EQ(sum, 0);
        }
}

TEST(Partitions, MobiusFromBottomMatchesInterval) {
    for (int k = 1; k <= 5; ++k)
        for (const auto& p : enumerate_partitions(k)) EXPECT_EQ(mobius_from_bottom(p), mobius(finest(k), p));
}

TEST(Partitions, KrewerasExamples) {
    EXPECT_EQ(kreweras(finest(3)), coarsest(3));
    EXPECT_EQ(kreweras(coarsest(3)), finest(3));
    for (const auto& p : enumerate_nc(5)) EXPECT_EQ(p.size() + kreweras(p).size(), 6);
}

TEST(Partitions, KrewerasMatchesBruteForce) {
    for (int k = 1; k <= 6; ++k)
        for (const auto& p : enumerate_nc(k)) {
            const auto kr = kreweras(p);
            EXPECT_TRUE(is_noncrossing(kr));
            EXPECT_EQ(kr, brute_kreweras(p));
        }
}

TEST(Partitions, FiniteCumulantsPointMass) {
    const auto p = Polynomial::linear_power(3, 2);
    const auto k = finite_free_cumulants(p);
    ASSERT_EQ(k.size(), 4u);
    EXPECT_EQ(k[1], 2);
    EXPECT_EQ(k[2], 0);
    EXPECT_EQ(k[3], 0);
}

TEST(Partitions, FirstCumulantIsMean) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 6;
        const auto p = oracle::random_poly(rng, n);
        if (p.degree() != n) continue;
        const auto k = finite_free_cumulants(p);
        const auto pm = oracle::power_sums_from_e(p.monic().e(), 1);
        EXPECT_EQ(k[1], pm[1] / n);
    }
}

TEST(Partitions, CumulantsLinearizeAdditiveConvolution) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 6;
        const auto p = Polynomial::from_monomial(oracle::expand_roots(oracle::random_roots(rng, n)));
        const auto q = Polynomial::from_monomial(oracle::expand_roots(oracle::random_roots(rng, n)));
        const auto kp = finite_free_cumulants(p);
        const auto kq = finite_free_cumulants(q);
        const auto ks = finite_free_cumulants(add_conv(p, q, n));
        for (int j = 1; j <= n; ++j) EXPECT_EQ(ks[j], kp[j] + kq[j]) << "n=" << n << " j=" << j;
    }
}

TEST(Partitions, CumulantRoundTripAndMoments) {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 8; ++n) {
        const auto roots = oracle::random_roots(rng, n);
        const auto p = Polynomial::from_monomial(oracle::expand_roots(roots));
        const auto k = finite_free_cumulants(p);
        const auto back = polynomial_from_finite_cumulants(k, n);
        EXPECT_EQ(back, p);
        // moments straight from the roots
        const auto pm = oracle::power_sums_from_e(back.e(), n);
        for (int j = 1; j <= n; ++j) {
            Rational direct = 0;
            for (const auto& r : roots) direct += ipow(r, j);
            EXPECT_EQ(pm[j], direct);
        }
    }
}

TEST(Partitions, MomentsFromCumulants) {
    // free Poisson of rate 1
    const std::vector<Rational> r{0, 1, 1, 1, 1};
    const auto m = moments_from_cumulants_nc(r, 4);
    EXPECT_EQ(m, (std::vector<Rational>{1, 1, 2, 5, 14}));
    const Rational a(3, 7);
    const auto ma = moments_from_cumulants_nc(std::vector<Rational>{0, a, 0, 0, 0}, 4);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(ma[k], ipow(a, k));
}

TEST(Partitions, MomentCumulantRoundTrip) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> r(7);
        for (int j = 1; j <= 6; ++j) r[j] = oracle::random_rational(rng);
        const auto m = moments_from_cumulants_nc(r, 6);
        const auto back = cumulants_from_moments_nc(m, 6);
        for (int j = 1; j <= 6; ++j) EXPECT_EQ(back[j], r[j]);
    }
    std::vector<std::complex<double>> rc{0, {1, 2}, {0.5, -1}, {2, 0}};
    const auto mc = moments_from_cumulants_nc(rc, 3);
    const auto bc = cumulants_from_moments_nc(mc, 3);
    for (int j = 1; j <= 3; ++j) EXPECT_NEAR(std::abs(bc[j] - rc[j]), 0.0, 1e-12);
}

TEST(Partitions, MultiplicativeCumulantProduct) {
    std::mt19937_64 rng(15);
    const std::vector<Rational> delta1{0, 1, 0, 0, 0, 0};
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> ra(6), rb(6);
        for (int j = 1; j <= 5; ++j) {
            ra[j] = oracle::random_rational(rng);
            rb[j] = oracle::random_rational(rng);
        }
        const auto id = multiplicative_cumulant_product(ra, delta1, 5);
        for (int j = 1; j <= 5; ++j) EXPECT_EQ(id[j], ra[j]);
        const auto ab = multiplicative_cumulant_product(ra, rb, 5);
        const auto ba = multiplicative_cumulant_product(rb, ra, 5);
        for (int j = 1; j <= 5; ++j) EXPECT_EQ(ab[j], ba[j]);
    }
}
