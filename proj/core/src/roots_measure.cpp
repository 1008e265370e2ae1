#include "finfree/roots_measure.hpp"

#include "finfree/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace finfree {

int schedule_root_precision(int degree) {
    if (degree <= 100) return 256;
    return 256 + 128 * ((degree - 100 + 99) / 100);
}

int default_root_precision(int degree) {
    if (const char* env = std::getenv("FINFREE_PREC_BITS")) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && bits >= 32) return static_cast<int>(bits);
    }
    return schedule_root_precision(degree);
}

namespace {

struct Eval {
    Complex value;
    Complex deriv;
    Real scale;  // sum |c_k| |z|^k
};

struct HornerScratch {
    Real t, u, az;
};

void horner(const std::vector<Real>& c, const std::vector<Real>& abs_c, const Complex& z, Eval& out,
            HornerScratch& s) {
    const int n = static_cast<int>(c.size()) - 1;
    mpfr_ptr pr = out.value.re.backend().data();
    mpfr_ptr pi = out.value.im.backend().data();
    mpfr_ptr dr = out.deriv.re.backend().data();
    mpfr_ptr di = out.deriv.im.backend().data();
    mpfr_ptr sc = out.scale.backend().data();
    mpfr_ptr t = s.t.backend().data();
    mpfr_ptr u = s.u.backend().data();
    mpfr_ptr az = s.az.backend().data();
    mpfr_srcptr zr = z.re.backend().data();
    mpfr_srcptr zi = z.im.backend().data();
    constexpr mpfr_rnd_t R = MPFR_RNDN;
    mpfr_hypot(az, zr, zi, R);
    mpfr_set(pr, c[n].backend().data(), R);
    mpfr_set_ui(pi, 0, R);
    mpfr_set_ui(dr, 0, R);
    mpfr_set_ui(di, 0, R);
    mpfr_set(sc, abs_c[n].backend().data(), R);
    for (int k = n - 1; k >= 0; --k) {
        // d = d z + p
        mpfr_fmms(t, dr, zr, di, zi, R);
        mpfr_add(t, t, pr, R);
        mpfr_fmma(u, dr, zi, di, zr, R);
        mpfr_add(di, u, pi, R);
        mpfr_swap(dr, t);
        // p = p z + c_k
        mpfr_fmms(t, pr, zr, pi, zi, R);
        mpfr_add(t, t, c[k].backend().data(), R);
        mpfr_fmma(pi, pr, zi, pi, zr, R);
        mpfr_swap(pr, t);
        mpfr_fma(sc, sc, az, abs_c[k].backend().data(), R);
    }
}

// Starting points from the upper convex hull of (k, log|c_k|).
std::vector<Complex> newton_polygon_start(const std::vector<Real>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<int> idx;
    std::vector<double> lg(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (c[k] == 0) continue;
        lg[k] = static_cast<double>(log(abs(c[k])));
        while (idx.size() >= 2) {
            const int a = idx[idx.size() - 2], b = idx.back();
            // drop b when it lies on or below the segment a-k
            if ((lg[b] - lg[a]) * (k - a) <= (lg[k] - lg[a]) * (b - a)) idx.pop_back();
            else break;
        }
        idx.push_back(k);
    }
    std::vector<Complex> z;
    z.reserve(n);
    const Real pi = boost::math::constants::pi<Real>();
    for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
        const int k1 = idx[e], k2 = idx[e + 1];
        const int m = k2 - k1;
        const Real radius = exp((log(abs(c[k1])) - log(abs(c[k2]))) / m);
        for (int j = 0; j < m; ++j) {
            const Real theta = 2 * pi * j / m + 2 * pi * static_cast<int>(e) / n + Real(0.7);
            z.push_back(polar(radius, theta));
        }
    }
    return z;
}

// sum_{j != i} 1 / (z_i - z_j), written against raw MPFR to avoid temporaries.
struct SumScratch {
    Real dr, di, nd, acc_re, acc_im;
};

void aberth_sum(const std::vector<Complex>& z, int i, Complex& out, SumScratch& s) {
    mpfr_ptr dr = s.dr.backend().data();
    mpfr_ptr di = s.di.backend().data();
    mpfr_ptr nd = s.nd.backend().data();
    mpfr_ptr ar = s.acc_re.backend().data();
    mpfr_ptr ai = s.acc_im.backend().data();
    mpfr_set_ui(ar, 0, MPFR_RNDN);
    mpfr_set_ui(ai, 0, MPFR_RNDN);
    mpfr_srcptr zr = z[i].re.backend().data();
    mpfr_srcptr zi = z[i].im.backend().data();
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        mpfr_sub(dr, zr, z[j].re.backend().data(), MPFR_RNDN);
        mpfr_sub(di, zi, z[j].im.backend().data(), MPFR_RNDN);
        mpfr_sqr(nd, dr, MPFR_RNDN);
        mpfr_fma(nd, di, di, nd, MPFR_RNDN);
        mpfr_ui_div(nd, 1, nd, MPFR_RNDN);
        mpfr_fma(ar, dr, nd, ar, MPFR_RNDN);
        mpfr_mul(di, di, nd, MPFR_RNDN);
        mpfr_sub(ai, ai, di, MPFR_RNDN);
    }
    out.re = s.acc_re;
    out.im = s.acc_im;
}

// Roots of multiplicity m are only resolved to about (2^-p)^(1/m). Groups of
// nearby roots are replaced by the simple root of p^(m-1) near their centroid
// when Newton converges there and the residual stays within the bound.
void polish_clusters(const std::vector<Real>& c, std::vector<Complex>& z, int bits, const Real& accept) {
    const int n = static_cast<int>(z.size());
    const Real group_tol = ldexp(Real(1), -bits / 8);
    const Real step_tol = ldexp(Real(1), -(bits - 8));
    std::vector<int> owner(n, -1);
    std::vector<Real> abs_c(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) abs_c[k] = abs(c[k]);
    Eval ev;
    HornerScratch hs;
    for (int i = 0; i < n; ++i) {
        if (owner[i] >= 0) continue;
        std::vector<int> group{i};
        owner[i] = i;
        for (std::size_t g = 0; g < group.size(); ++g)
            for (int j = 0; j < n; ++j)
                if (owner[j] < 0 && abs(z[group[g]] - z[j]) <= group_tol * (1 + abs(z[j]))) {
                    owner[j] = i;
                    group.push_back(j);
                }
        const int m = static_cast<int>(group.size());
        if (m < 2 || m > static_cast<int>(c.size()) - 1) continue;
        Complex center;
        for (int j : group) center += z[j];
        center.re /= m;
        center.im /= m;
        // coefficients of p^(m-1)
        const int deg = static_cast<int>(c.size()) - 1;
        std::vector<Real> d(deg - m + 2), abs_d(deg - m + 2);
        for (int k = 0; k <= deg - m + 1; ++k) {
            Real f = c[k + m - 1];
            for (int t = k + 1; t <= k + m - 1; ++t) f *= t;
            d[k] = f;
            abs_d[k] = abs(f);
        }
        bool ok = false;
        Complex zeta = center;
        for (int it = 0; it < 100; ++it) {
            horner(d, abs_d, zeta, ev, hs);
            if (ev.deriv.re == 0 && ev.deriv.im == 0) break;
            const Complex w = ev.value / ev.deriv;
            zeta -= w;
            if (abs(w) <= step_tol * (1 + abs(zeta))) {
                ok = true;
                break;
            }
        }
        if (!ok || abs(zeta - center) > group_tol * (1 + abs(center))) continue;
        horner(c, abs_c, zeta, ev, hs);
        if (!(abs(ev.value) <= accept * ev.scale)) continue;
        for (int j : group) z[j] = zeta;
    }
}

bool complex_less(const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

}  // namespace

RootResult aberth(const Polynomial& p, int precision_bits, int max_iterations) {
    const int deg = p.degree();
    if (deg < 1) throw Error(ErrorCode::ZeroDegree, "find_roots needs degree >= 1");
    RootResult res;
    res.precision_bits = precision_bits > 0 ? precision_bits : default_root_precision(deg);
    PrecisionGuard guard(res.precision_bits);

    std::vector<Real> c(deg + 1);
    if (p.is_exact()) {
        const auto m = p.monomial();
        for (int k = 0; k <= deg; ++k) c[k] = to_real(m[k]);
    } else {
        const auto m = p.monomial_float();
        for (int k = 0; k <= deg; ++k) c[k] = Real(m[k]);
    }
    // exact zero roots are split off
    int zeros = 0;
    while (c[zeros] == 0) ++zeros;
    c.erase(c.begin(), c.begin() + zeros);
    const int n = deg - zeros;
    for (int k = 0; k < zeros; ++k) res.roots.emplace_back(Real(0), Real(0));
    if (n == 0) return res;

    std::vector<Real> abs_c(n + 1);
    for (int k = 0; k <= n; ++k) abs_c[k] = abs(c[k]);

    std::vector<Complex> z = newton_polygon_start(c);
    std::vector<char> frozen(n, 0);
    const Real eps = ldexp(Real(1), -res.precision_bits);
    const Real step_tol = ldexp(Real(1), -(res.precision_bits - 8));
    const Real noise = eps * 4 * (n + 1);
    if (max_iterations <= 0) max_iterations = 1000 + 5 * n;

    Eval ev;
    Complex ratio, sum, w;
    SumScratch scratch;
    HornerScratch hs;
    int active = n;
    int it = 0;
    for (; it < max_iterations && active > 0; ++it) {
        active = 0;
        for (int i = 0; i < n; ++i) {
            if (frozen[i]) continue;
            horner(c, abs_c, z[i], ev, hs);
            if (abs(ev.value) <= noise * ev.scale) {
                frozen[i] = 1;
                continue;
            }
            ratio = ev.value / ev.deriv;
            aberth_sum(z, i, sum, scratch);
            w = ratio / (Complex(Real(1)) - ratio * sum);
            z[i] -= w;
            if (abs(w) <= step_tol * abs(z[i])) frozen[i] = 1;
            else ++active;
        }
    }
    res.iterations = it;

    const Real accept = ldexp(Real(1), -res.precision_bits / 2);
    polish_clusters(c, z, res.precision_bits, accept);
    double worst = -1e300;
    for (int i = 0; i < n; ++i) {
        horner(c, abs_c, z[i], ev, hs);
        const Real rel = abs(ev.value) / ev.scale;
        if (!(rel < accept)) ++res.unconverged;
        const double l = rel == 0 ? -static_cast<double>(res.precision_bits) * 2 : static_cast<double>(log2(rel));
        worst = std::max(worst, l);
        res.roots.push_back(z[i]);
    }
    res.worst_log2_residual = worst;
    std::sort(res.roots.begin(), res.roots.end(), complex_less);
    return res;
}

std::vector<Complex> find_roots(const Polynomial& p, int precision_bits) {
    auto res = aberth(p, precision_bits);
    if (!res.converged()) {
        std::ostringstream os;
        os << "Aberth iteration did not converge: " << res.unconverged << " of " << res.roots.size()
           << " roots above residual bound after " << res.iterations << " sweeps at " << res.precision_bits
           << " bits (worst log2 relative residual " << res.worst_log2_residual << ")";
        throw Error(ErrorCode::NonConvergence, os.str());
    }
    return std::move(res.roots);
}

EmpiricalDistribution empirical(const Polynomial& p, int precision_bits) {
    EmpiricalDistribution d;
    d.precision_bits = precision_bits > 0 ? precision_bits : default_root_precision(p.degree());
    d.roots = find_roots(p, d.precision_bits);
    return d;
}

std::vector<Complex> moments(const EmpiricalDistribution& d, int K) {
    PrecisionGuard guard(d.precision_bits);
    std::vector<Complex> m(K + 1);
    m[0] = Complex(Real(1));
    for (const auto& z : d.roots) {
        Complex pw(Real(1));
        for (int k = 1; k <= K; ++k) {
            pw *= z;
            m[k] += pw;
        }
    }
    const Real inv = Real(1) / d.n();
    for (int k = 1; k <= K; ++k) {
        m[k].re *= inv;
        m[k].im *= inv;
    }
    return m;
}

std::vector<Rational> newton_moments(const Polynomial& p, int K) {
    if (!p.is_exact()) throw Error(ErrorCode::FloatBackend, "newton_moments needs an exact polynomial");
    const int n = p.n();
    if (p.degree() != n) throw Error(ErrorCode::DegreeMismatch, "newton_moments needs full degree");
    const Polynomial m = p.monic();
    // p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k, with e_k = 0 for k > n
    std::vector<Rational> ps(K + 1);
    ps[0] = n;
    for (int k = 1; k <= K; ++k) {
        Rational s = 0;
        for (int i = 1; i <= std::min(k, n); ++i) {
            const Rational term = (i == k) ? Rational(k) * m.e(i) : m.e(i) * ps[k - i];
            s += (i % 2 == 1) ? term : Rational(-term);
        }
        ps[k] = s;
    }
    for (auto& x : ps) x /= n;
    return ps;
}

Real imaginary_margin(const std::vector<Complex>& roots) {
    Real worst = 0;
    for (const auto& z : roots) worst = std::max<Real>(worst, abs(z.im) / (1 + abs(z)));
    return worst;
}

bool is_real_rooted(const Polynomial& p, int precision_bits, const Real& tau, Real* margin) {
    const auto roots = find_roots(p, precision_bits);
    PrecisionGuard guard(precision_bits > 0 ? precision_bits : default_root_precision(p.degree()));
    const Real m = imaginary_margin(roots);
    if (margin) *margin = m;
    return m <= tau;
}

std::vector<Real> real_roots(const std::vector<Complex>& roots, const Real& tau) {
    std::vector<Real> out;
    out.reserve(roots.size());
    for (const auto& z : roots) {
        if (abs(z.im) > tau * (1 + abs(z))) throw Error(ErrorCode::NonRealRoots, "root with nonzero imaginary part");
        out.push_back(z.re);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class T, class Le, class Lt>
InterlacingVerdict interlace_chain(const std::vector<T>& p, const std::vector<T>& q, Le le, Lt lt) {
    const long np = static_cast<long>(p.size()), nq = static_cast<long>(q.size());
    if (std::abs(np - nq) > 1) throw Error(ErrorCode::DegreeGapTooLarge, "root counts differ by more than one");
    InterlacingVerdict v;
    v.kind = (nq == np) ? InterlacingCase::EqualDegree : InterlacingCase::DegreeDrop;
    if (nq == np + 1) return v;  // neither definitional case
    std::vector<const T*> chain;
    for (long i = 0; i < np; ++i) {
        chain.push_back(&p[i]);
        if (i < nq) chain.push_back(&q[i]);
    }
    bool strict = true;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!le(*chain[i], *chain[i + 1])) return v;
        if (!lt(*chain[i], *chain[i + 1])) strict = false;
    }
    v.relation = strict ? Interlacing::Strict : Interlacing::Weak;
    return v;
}

}  // namespace

InterlacingVerdict interlaces(const std::vector<Real>& p_roots, const std::vector<Real>& q_roots, const Real& tau) {
    return interlace_chain(
        p_roots, q_roots, [&](const Real& a, const Real& b) { return a <= b + tau; },
        [&](const Real& a, const Real& b) { return b - a > tau; });
}

InterlacingVerdict interlaces(const std::vector<Rational>& p_roots, const std::vector<Rational>& q_roots) {
    return interlace_chain(
        p_roots, q_roots, [](const Rational& a, const Rational& b) { return a <= b; },
        [](const Rational& a, const Rational& b) { return a < b; });
}

std::vector<HistogramBin> histogram(const EmpiricalDistribution& d, int bins, double lo, double hi) {
    if (bins < 1 || !(hi > lo)) throw Error(ErrorCode::InvalidParameters, "histogram needs bins >= 1 and hi > lo");
    std::vector<HistogramBin> out(bins);
    const double width = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b) {
        out[b].lo = lo + b * width;
        out[b].hi = (b + 1 == bins) ? hi : lo + (b + 1) * width;
    }
    for (const auto& z : d.roots) {
        const double x = static_cast<double>(z.re);
        if (x < lo || x > hi) continue;
        int b = static_cast<int>((x - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++out[b].count;
    }
    for (auto& bin : out) bin.density = d.n() ? static_cast<double>(bin.count) / (d.n() * width) : 0.0;
    return out;
}

double ks_distance(const EmpiricalDistribution& d, const std::function<double(double)>& cdf, const Real& tau) {
    const auto xs = real_roots(d.roots, tau);
    const double n = static_cast<double>(xs.size());
    double worst = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
        // group tied roots so that the empirical CDF jumps once per value
        const double v = static_cast<double>(xs[i]);
        std::size_t j = i;
        while (j < xs.size() && static_cast<double>(xs[j]) == v) ++j;
        const double before = i / n, after = j / n;
        const double left = cdf(std::nextafter(v, -HUGE_VAL));
        const double at = cdf(v);
        worst = std::max({worst, std::abs(after - at), std::abs(before - left)});
        i = j;
    }
    return worst;
}

}  // namespace finfree
