#pragma once

/**
 * @file asymptotics.hpp
 * @brief Transform series, rational S-transform limits, algebraic Cauchy
 *        curves, Stieltjes inversion and closed-form limit densities.
 *
 * Series conventions (truncation order K):
 *   moments   m[0..K], m[0] = 1, M(z) = sum_{k>=1} m_k z^k
 *   Cauchy    G(u) = sum_k m_k u^(-k-1)
 *   R         R(w) = sum_{k=0}^{K-1} r[k] w^k, r[k] = kappa_{k+1}
 *   S         S(w) = sum_{k=0}^{K-1} s[k] w^k, S(w) = (w+1)/w M^{-1}(w)
 *
 * Curves are bivariate F(y,u) with y = u G(u), so the physical branch
 * satisfies y -> 1 as u -> infinity.
 */

#include "finfree/error.hpp"
#include "finfree/partitions.hpp"
#include "finfree/scalar.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace finfree {

constexpr int kDefaultSeriesOrder = 8;

namespace series_detail {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0); }
inline bool is_zero(double x) { return x == 0.0; }
}  // namespace series_detail

// ---------------------------------------------------------------------------
// Truncated power series, s[k] the coefficient of z^k, k = 0..order.

template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, int order) {
    std::vector<T> out(order + 1, T(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (series_detail::is_zero(a[i])) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

template <class T>
std::vector<T> series_inv(const std::vector<T>& a, int order) {
    if (a.empty() || series_detail::is_zero(a[0])) throw Error(ErrorCode::InvalidParameters, "series_inv: zero constant term");
    std::vector<T> out(order + 1, T(0));
    out[0] = T(1) / a[0];
    for (int k = 1; k <= order; ++k) {
        T acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * out[k - j];
        out[k] = -acc / a[0];
    }
    return out;
}

// f(g(z)) with g(0) = 0.
template <class T>
std::vector<T> series_compose(const std::vector<T>& f, const std::vector<T>& g, int order) {
    if (!g.empty() && !series_detail::is_zero(g[0]))
        throw Error(ErrorCode::InvalidParameters, "series_compose: inner series must vanish at 0");
    std::vector<T> out(order + 1, T(0));
    std::vector<T> power(order + 1, T(0));
    power[0] = T(1);
    for (int k = 0; k <= order && k < static_cast<int>(f.size()); ++k) {
        if (k > 0) power = series_mul(power, g, order);
        if (series_detail::is_zero(f[k])) continue;
        for (int j = 0; j <= order; ++j) out[j] += f[k] * power[j];
    }
    return out;
}

// Compositional inverse of f with f(0) = 0, f'(0) != 0.
template <class T>
std::vector<T> series_reverse(const std::vector<T>& f, int order) {
    if (f.size() < 2 || !series_detail::is_zero(f[0]) || series_detail::is_zero(f[1]))
        throw Error(ErrorCode::InvalidParameters, "series_reverse: need f(0) = 0 and f'(0) != 0");
    std::vector<T> g(order + 1, T(0));
    if (order >= 1) g[1] = T(1) / f[1];
    for (int k = 2; k <= order; ++k) {
        auto c = series_compose(f, g, k);
        g[k] = -c[k] / f[1];
    }
    return g;
}

// ---------------------------------------------------------------------------
// Moment, R and S series.

template <class T>
std::vector<T> r_from_moments(const std::vector<T>& m, int order) {
    auto kappa = cumulants_from_moments_nc(m, order);
    return std::vector<T>(kappa.begin() + 1, kappa.end());
}

template <class T>
std::vector<T> moments_from_r(const std::vector<T>& r, int order) {
    std::vector<T> kappa(order + 1, T(0));
    for (int k = 1; k <= order && k - 1 < static_cast<int>(r.size()); ++k) kappa[k] = r[k - 1];
    return moments_from_cumulants_nc(kappa, order);
}

// s[0..order-1] from m[0..order].
template <class T>
std::vector<T> s_from_moments(const std::vector<T>& m, int order) {
    if (order < 1) return {};
    if (series_detail::is_zero(m.at(1))) throw Error(ErrorCode::VanishingFirstMoment, "S-transform needs m1 != 0");
    std::vector<T> big_m(order + 1, T(0));
    for (int k = 1; k <= order; ++k) big_m[k] = m.at(k);
    auto inv = series_reverse(big_m, order);
    std::vector<T> s(order, T(0));
    for (int k = 0; k < order; ++k) {
        s[k] = inv[k + 1];
        if (k >= 1) s[k] += inv[k];
    }
    return s;
}

// m[0..order] from s[0..order-1]; M^{-1}(w) = w S(w) / (1 + w).
template <class T>
std::vector<T> moments_from_s(const std::vector<T>& s, int order) {
    if (s.empty() || series_detail::is_zero(s[0])) throw Error(ErrorCode::VanishingFirstMoment, "S(0) must be nonzero");
    std::vector<T> geom(order + 1, T(0));
    for (int k = 0; k <= order; ++k) geom[k] = (k % 2 == 0) ? T(1) : T(-1);
    std::vector<T> ws(order + 1, T(0));
    for (int k = 0; k + 1 <= order && k < static_cast<int>(s.size()); ++k) ws[k + 1] = s[k];
    auto inv = series_mul(ws, geom, order);
    auto big_m = series_reverse(inv, order);
    big_m[0] = T(1);
    return big_m;
}

template <class T>
struct TransformSeries {
    std::vector<T> moments;  // m[0..K]
    std::vector<T> cauchy;   // coefficient of u^(-k-1), equal to m_k
    std::vector<T> r;        // r[0..K-1]
    std::vector<T> s;        // s[0..K-1]; empty when m1 = 0 and S was not requested
};

template <class T>
TransformSeries<T> series_bridge(const std::vector<T>& m, int order = kDefaultSeriesOrder, bool require_s = true) {
    TransformSeries<T> out;
    out.moments.assign(m.begin(), m.begin() + order + 1);
    out.cauchy = out.moments;
    out.r = r_from_moments(out.moments, order);
    if (require_s || !series_detail::is_zero(m.at(1))) out.s = s_from_moments(out.moments, order);
    return out;
}

template <class T>
std::vector<T> free_add(const std::vector<T>& ma, const std::vector<T>& mb, int order = kDefaultSeriesOrder) {
    auto ra = r_from_moments(ma, order);
    auto rb = r_from_moments(mb, order);
    for (int k = 0; k < order; ++k) ra[k] += rb[k];
    return moments_from_r(ra, order);
}

template <class T>
std::vector<T> free_mult(const std::vector<T>& ma, const std::vector<T>& mb, int order = kDefaultSeriesOrder) {
    auto sa = s_from_moments(ma, order);
    auto sb = s_from_moments(mb, order);
    return moments_from_s(series_mul(sa, sb, order - 1), order);
}

// ---------------------------------------------------------------------------
// Rational S-transforms S(z) = scale * prod(z + A_i + 1) / prod(z + B_j + 1).

struct DegeneracyFlags {
    bool a_in_minus1_0 = false;  // some A_i in [-1, 0)
    bool a_minus1 = false;       // some A_i = -1: mass escapes to infinity
    bool b_minus1 = false;       // some B_j = -1: limit is delta_0
    bool a_equals_b = false;     // some A_i = B_j: factors cancel
    bool any() const { return a_in_minus1_0 || a_minus1 || b_minus1 || a_equals_b; }
    std::string describe() const;
};

struct RationalSTransform {
    std::vector<Rational> A;
    std::vector<Rational> B;
    Rational scale = 1;
    DegeneracyFlags flags;

    // s[0..order-1]; requires all B_j != -1.
    std::vector<Rational> series(int order) const;
    std::complex<double> evaluate(std::complex<double> z) const;
    // S_{mu*}(w) = 1 / S_mu(-w-1) for the reciprocal-root measure.
    RationalSTransform reversed() const;
};

DegeneracyFlags degeneracy_flags(const std::vector<Rational>& A, const std::vector<Rational>& B);
RationalSTransform s_limit_hyper(const std::vector<Rational>& A, const std::vector<Rational>& B);
std::vector<Rational> moments_from_rational_s(const RationalSTransform& s, int order = kDefaultSeriesOrder);

// S(z) S_rev(-z-1) = 1 to order K, with S expanded at 0 and S_rev continued
// as a rational function to a neighbourhood of -1.
bool s_reverse_check(const RationalSTransform& s, const RationalSTransform& s_rev, int order = kDefaultSeriesOrder);

// ---------------------------------------------------------------------------
// Bivariate polynomials F(y,u) = sum c[j][i] y^i u^j.

class Bivariate {
public:
    Bivariate() = default;
    static Bivariate constant(const Rational& c);
    static Bivariate y();
    static Bivariate u();
    // a y + b u + c
    static Bivariate linear(const Rational& a, const Rational& b, const Rational& c);

    const std::vector<std::vector<Rational>>& coeff() const { return c_; }
    Rational at(int i, int j) const;  // coefficient of y^i u^j
    int degree_y() const;
    int degree_u() const;
    bool is_zero() const;

    Bivariate& operator+=(const Bivariate& o);
    Bivariate& operator-=(const Bivariate& o);
    Bivariate& operator*=(const Bivariate& o);
    Bivariate& operator*=(const Rational& s);
    bool operator==(const Bivariate& o) const;

    // Coefficients in y of F(., u) at a fixed u.
    std::vector<std::complex<double>> in_y(std::complex<double> u) const;
    std::complex<double> eval(std::complex<double> y, std::complex<double> u) const;
    std::string to_string() const;

private:
    void trim();
    void set(int i, int j, const Rational& v);
    std::vector<std::vector<Rational>> c_;  // c_[j][i]
};

Bivariate operator+(Bivariate a, const Bivariate& b);
Bivariate operator-(Bivariate a, const Bivariate& b);
Bivariate operator*(Bivariate a, const Bivariate& b);
Bivariate operator*(const Rational& s, Bivariate a);

struct AlgebraicCurve {
    Bivariate F;
    std::string label;
};

// y prod(y + B_j) - u (y - 1) prod(y + A_i)
AlgebraicCurve curve_from_limits(const std::vector<Rational>& A, const std::vector<Rational>& B);

// Implicit relation G(w, z) = 0 between z and w = S_mu(z) for the argument
// c x + d, returned with w in the first slot and z in the second.
Bivariate curve_shifted(const std::vector<Rational>& A, const std::vector<Rational>& B, const Rational& c,
                        const Rational& d);

// m[0..K] by matching powers of 1/u in F(1 + m1/u + ..., u) = 0.
std::vector<Rational> moments_from_curve(const AlgebraicCurve& curve, int order = kDefaultSeriesOrder);

struct ContinuationOptions {
    double start_radius = 1e6;
    double newton_tol = 1e-14;
    int max_steps = 200000;
};

// Physical branch by continuation from u = +start_radius (seed y ~ 1). The
// path reaches the first grid point vertically then horizontally; later
// points follow straight segments from their predecessor.
std::vector<std::complex<double>> solve_curve_branch(const AlgebraicCurve& curve,
                                                     const std::vector<std::complex<double>>& grid,
                                                     const ContinuationOptions& opt = {});

// Boundary value y(x + i0) for real x != 0: continuation to x + i eps for
// each eps, Richardson extrapolation, then Newton at u = x.
std::complex<double> boundary_value(const AlgebraicCurve& curve, double x,
                                    const std::vector<double>& eps = {1e-3, 5e-4});

// density(x) = -Im y(x + i0) / (pi x), multiplied by scale.
std::vector<double> stieltjes_density(const AlgebraicCurve& curve, const std::vector<double>& xs,
                                      const std::vector<double>& eps = {1e-3, 5e-4}, double scale = 1.0);

// ---------------------------------------------------------------------------
// Closed-form densities and endpoints.

struct DensityModel {
    double lo = 0;
    double hi = 0;
    std::map<std::string, double> constants;
    std::function<double(double)> density;

    double cdf(double x) const;
    double mass() const;
};

DensityModel density_jp_typeI_r2(const Rational& theta);
DensityModel density_jp_typeII_r2(const Rational& theta);

struct EndpointResult {
    std::string family;
    Real value;
    std::optional<Rational> exact;
    double support_lo = 0;
    double support_hi = 0;
};

// family in {jp1-r2, ml1-1-r2, jp2-r2-a, jp2-r2-b, ml1-2-r2}; param is theta,
// theta, A, B and theta respectively. Evaluated at the current precision.
EndpointResult endpoints(const std::string& family, const Rational& param);
Real endpoint_ml1_typeII_r2(const Real& theta);

// ---------------------------------------------------------------------------
// Limit objects of the six multiple orthogonal families.

enum class MopFamily { JP1, JP2, ML11, ML12, ML21, ML22 };

MopFamily parse_family(const std::string& name);
std::string family_name(MopFamily f);
bool is_type_one(MopFamily f);

struct LimitParams {
    std::vector<Rational> A;      // alpha limits (per component; ML2 uses A[0])
    Rational B = 0;               // beta limit (JP only)
    std::vector<Rational> theta;  // n_i / |n| limits
    std::vector<Rational> c;      // ML2 c-limits
    int i = 1;                    // component (Type I), 1-based
};

struct FamilyLimit {
    MopFamily family = MopFamily::JP1;
    AlgebraicCurve curve;                  // y = u G(u) of the measure described
    std::optional<RationalSTransform> s;   // when rational
    Rational zero_mass = 0;                // JP-II: the curve describes (B delta_0 + mu)/(1+B)
    DegeneracyFlags flags;
    std::string scaling;                   // variable scaling of the finite polynomials
};

FamilyLimit family_curves(MopFamily family, const LimitParams& params);

// Moments m[0..K] of mu itself (undoing the zero-mass mixing).
std::vector<Rational> limit_moments(const FamilyLimit& limit, int order = kDefaultSeriesOrder);

}  // namespace finfree
