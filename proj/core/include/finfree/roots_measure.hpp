#pragma once

/**
 * @file roots_measure.hpp
 * @brief Multiprecision roots, empirical root distributions and interlacing.
 */

#include "finfree/poly_core.hpp"

#include <functional>
#include <vector>

namespace finfree {

// 256 bits up to degree 100, then 128 more bits per started block of 100.
// FINFREE_PREC_BITS overrides the schedule when set.
int default_root_precision(int degree);
int schedule_root_precision(int degree);

struct RootResult {
    std::vector<Complex> roots;  // sorted by real part, then imaginary part
    int precision_bits = 0;
    int iterations = 0;
    int unconverged = 0;
    double worst_log2_residual = 0;  // max over roots of log2(|p(z)| / scale(z))
    bool converged() const { return unconverged == 0; }
};

// Aberth-Ehrlich iteration; never throws on slow convergence.
RootResult aberth(const Polynomial& p, int precision_bits = 0, int max_iterations = 0);
// Same, but raises NonConvergence with diagnostics.
std::vector<Complex> find_roots(const Polynomial& p, int precision_bits = 0);

struct EmpiricalDistribution {
    std::vector<Complex> roots;
    int precision_bits = 0;
    int n() const { return static_cast<int>(roots.size()); }
};

EmpiricalDistribution empirical(const Polynomial& p, int precision_bits = 0);
// m_0..m_K of the normalized counting measure.
std::vector<Complex> moments(const EmpiricalDistribution& d, int K);
// Exact m_0..m_K from the coefficients via Newton's identities.
std::vector<Rational> newton_moments(const Polynomial& p, int K);

// max_j |Im z_j| / (1 + |z_j|)
Real imaginary_margin(const std::vector<Complex>& roots);
bool is_real_rooted(const Polynomial& p, int precision_bits, const Real& tau, Real* margin = nullptr);
// Sorted real parts; NonRealRoots if some |Im z| > tau (1 + |z|).
std::vector<Real> real_roots(const std::vector<Complex>& roots, const Real& tau);

enum class Interlacing { Strict, Weak, None };
enum class InterlacingCase { EqualDegree, DegreeDrop };

struct InterlacingVerdict {
    Interlacing relation = Interlacing::None;
    InterlacingCase kind = InterlacingCase::EqualDegree;
    bool holds() const { return relation != Interlacing::None; }
};

// Does q interlace p (p before q in the merged chain)? Inequalities hold up to
// tau; strictness requires every gap to exceed tau.
InterlacingVerdict interlaces(const std::vector<Real>& p_roots, const std::vector<Real>& q_roots, const Real& tau);
InterlacingVerdict interlaces(const std::vector<Rational>& p_roots, const std::vector<Rational>& q_roots);

struct HistogramBin {
    double lo = 0;
    double hi = 0;
    long count = 0;
    double density = 0;
};

// Real parts binned uniformly on [lo, hi]; density = count / (n * width).
std::vector<HistogramBin> histogram(const EmpiricalDistribution& d, int bins, double lo, double hi);
double ks_distance(const EmpiricalDistribution& d, const std::function<double(double)>& cdf, const Real& tau);

}  // namespace finfree
