#pragma once

/**
 * @file suites.hpp
 * @brief Verification suites shared by the command-line front end and the
 *        acceptance driver. Each suite measures; callers decide thresholds.
 */

#include "finfree/asymptotics.hpp"
#include "finfree/mop.hpp"
#include "finfree/scalar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace finfree {

// Counts for one family of exact checks.
struct Tally {
    Tally() = default;
    explicit Tally(std::string label) : name(std::move(label)) {}

    std::string name;
    int draws = 0;
    int failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what);
};

struct SuiteReport {
    std::string suite;
    std::vector<Tally> tallies;
    double seconds = 0;

    int draws() const;
    int failures() const;
};

// Convolution identities, hypergeometric product rules and the Kampe de
// Feriet factorizations on random rational inputs with 1 <= n <= max_n.
SuiteReport identity_suite(int max_n = 8, int draws = 100, std::uint64_t seed = 1);

// Cumulant additivity for n <= max_n, the non-crossing moment-cumulant round
// trip to order max_k, and the Kreweras product rule against S-multiplication
// for free Poisson times a point mass to kreweras_order.
SuiteReport cumulant_suite(int max_n = 6, int max_k = 6, int kreweras_order = 4, int draws = 100,
                           std::uint64_t seed = 2);

// Zero location and interlacing theorems on random draws satisfying their
// hypotheses, with |n| <= max_total.
SuiteReport interlacing_suite(int max_total = 9, int draws = 20, std::uint64_t seed = 3, unsigned bits = 256);

struct OrthogonalityRow {
    MopFamily family = MopFamily::JP1;
    MultiIndex n;
    double residual = 0;
    double normalization = 0;
    bool normalization_ok = true;
};

// Every family at two weights with all indices n_1, n_2 >= 1, |n| <= max_total.
std::vector<OrthogonalityRow> orthogonality_suite(int max_total = 6, unsigned bits = 256);

struct MarchenkoPasturReport {
    std::vector<Rational> s_series;       // S(z) coefficients from the hypergeometric limit
    std::vector<Rational> s_expected;     // 1/(1+z) = 1 - z + z^2 - ...
    bool curve_matches = false;           // F == y^2 - u y + u
    std::vector<double> support;          // real zeros of the discriminant in u
    std::vector<Rational> moments_s;      // by series reversion of S
    std::vector<Rational> moments_curve;  // from the curve
    std::vector<Rational> moments_nc;     // non-crossing partition sum with all cumulants 1
    double density_at_two = 0;
    double density_outside = 0;           // max |density| on (4, 6]
};

MarchenkoPasturReport marchenko_pastur_chain(int order = 4);

struct EndpointReport {
    Rational ml1_typeII_half;               // exact value at theta = 1/2
    std::vector<double> small_theta;        // theta = 1e-2, 1e-4, ..., 1e-12
    std::vector<double> small_theta_value;
    double largest_zero = 0;                // ML1-II, alpha = (0, 1/3), n = (k, k), L(|n| x)
    double curve_b_zero = 0;                // JP-II right endpoint at B = 0
    double curve_a_zero = 0;                // JP-II left endpoint at A = 0
    Rational jp1_third;                     // JP-I endpoint at theta = 1/3
};

EndpointReport endpoint_suite(int zero_index = 64);

struct MomentConvergenceRow {
    std::string label;
    std::vector<MultiIndex> indices;
    std::vector<Rational> limit;                 // m_1..m_3 of the limit law
    std::vector<std::vector<double>> rel_error;  // [size][moment]

    bool monotone() const;
    double final_error() const;
};

// JP-I on n = (k, 2k) with i = 1; JP-II, ML1-II and ML2-II on the step line
// n = (k/2, k/2); k in sizes. Moments are exact from the coefficients.
std::vector<MomentConvergenceRow> moment_convergence_suite(const std::vector<int>& sizes = {32, 64, 128});

struct DensityCase {
    std::string label;
    double max_error = 0;  // max |inversion - closed form| / max(1, closed form)
    double mass = 0;
    double slope_zero = 0;  // log-log slope at the x^(-2/3) edge
    double slope_one = 0;   // log-log slope at the (1-x)^(-1/2) edge; NaN when absent
};

std::vector<DensityCase> density_suite(int grid = 19);

struct ZeroSampleReport {
    int count = 0;
    int precision_bits = 0;
    bool all_real = false;
    bool all_negative = false;
    double min_root = 0;
    double max_root = 0;
    double ks = 1;
    Rational c_star;
    std::vector<Real> roots;
};

// Zeros of the JP Type I component i = 1 at n = (300, 600), alpha = (1/2, 3/7),
// beta = 1, compared with the theta = 1/3 limit density.
ZeroSampleReport jp_typeI_zero_sample(const MultiIndex& n = {300, 600}, int precision_bits = 0);

}  // namespace finfree
