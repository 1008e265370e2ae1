#include "finfree/asymptotics.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace finfree {

using cd = std::complex<double>;

// ---------------------------------------------------------------------------
// Rational S-transforms

std::string DegeneracyFlags::describe() const {
    std::vector<std::string> parts;
    if (a_minus1) parts.emplace_back("A=-1 (mass escapes to infinity)");
    else if (a_in_minus1_0) parts.emplace_back("A in (-1,0) (atom at infinity of mass |A|)");
    if (b_minus1) parts.emplace_back("B=-1 (limit delta_0)");
    if (a_equals_b) parts.emplace_back("A=B (cancelling factors)");
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "; " : "") + parts[k];
    return out.empty() ? "none" : out;
}

DegeneracyFlags degeneracy_flags(const std::vector<Rational>& A, const std::vector<Rational>& B) {
    DegeneracyFlags f;
    for (const auto& a : A) {
        if (a >= -1 && a < 0) f.a_in_minus1_0 = true;
        if (a == -1) f.a_minus1 = true;
        for (const auto& b : B)
            if (a == b) f.a_equals_b = true;
    }
    for (const auto& b : B)
        if (b == -1) f.b_minus1 = true;
    return f;
}

RationalSTransform s_limit_hyper(const std::vector<Rational>& A, const std::vector<Rational>& B) {
    RationalSTransform s;
    s.A = A;
    s.B = B;
    s.flags = degeneracy_flags(A, B);
    return s;
}

std::vector<Rational> RationalSTransform::series(int order) const {
    std::vector<Rational> num{scale};
    for (const auto& a : A) num = series_mul(num, std::vector<Rational>{a + 1, 1}, order);
    std::vector<Rational> den{1};
    for (const auto& b : B) {
        if (b == -1) throw Error(ErrorCode::BranchDegenerate, "S has a pole at 0 (B = -1)");
        den = series_mul(den, std::vector<Rational>{b + 1, 1}, order);
    }
    auto s = series_mul(num, series_inv(den, order), order);
    s.resize(order);
    return s;
}

cd RationalSTransform::evaluate(cd z) const {
    cd acc(to_double(scale), 0.0);
    for (const auto& a : A) acc *= z + to_double(a) + 1.0;
    for (const auto& b : B) acc /= z + to_double(b) + 1.0;
    return acc;
}

RationalSTransform RationalSTransform::reversed() const {
    RationalSTransform out;
    for (const auto& b : B) out.A.push_back(-b - 1);
    for (const auto& a : A) out.B.push_back(-a - 1);
    if (scale == 0) throw Error(ErrorCode::InvalidParameters, "zero S-transform has no reversal");
    out.scale = Rational(((B.size() + A.size()) % 2 == 0) ? 1 : -1) / scale;
    out.flags = degeneracy_flags(out.A, out.B);
    return out;
}

std::vector<Rational> moments_from_rational_s(const RationalSTransform& s, int order) {
    return moments_from_s(s.series(order), order);
}

bool s_reverse_check(const RationalSTransform& s, const RationalSTransform& s_rev, int order) {
    auto left = s.series(order + 1);
    // S_rev(-z-1): each factor (w + a + 1) becomes (a - z).
    std::vector<Rational> num{s_rev.scale};
    for (const auto& a : s_rev.A) num = series_mul(num, std::vector<Rational>{a, -1}, order);
    std::vector<Rational> den{1};
    for (const auto& b : s_rev.B) {
        if (b == 0) return false;
        den = series_mul(den, std::vector<Rational>{b, -1}, order);
    }
    auto right = series_mul(num, series_inv(den, order), order);
    auto prod = series_mul(left, right, order);
    if (prod[0] != 1) return false;
    for (int k = 1; k <= order; ++k)
        if (prod[k] != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials

Bivariate Bivariate::constant(const Rational& c) {
    Bivariate b;
    b.set(0, 0, c);
    b.trim();
    return b;
}

Bivariate Bivariate::y() {
    Bivariate b;
    b.set(1, 0, 1);
    return b;
}

Bivariate Bivariate::u() {
    Bivariate b;
    b.set(0, 1, 1);
    return b;
}

Bivariate Bivariate::linear(const Rational& a, const Rational& bu, const Rational& c) {
    Bivariate b;
    b.set(1, 0, a);
    b.set(0, 1, bu);
    b.set(0, 0, c);
    b.trim();
    return b;
}

void Bivariate::set(int i, int j, const Rational& v) {
    if (static_cast<int>(c_.size()) <= j) c_.resize(j + 1);
    if (static_cast<int>(c_[j].size()) <= i) c_[j].resize(i + 1, Rational(0));
    c_[j][i] = v;
}

void Bivariate::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Rational Bivariate::at(int i, int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
    if (i < 0 || i >= static_cast<int>(c_[j].size())) return 0;
    return c_[j][i];
}

int Bivariate::degree_u() const { return static_cast<int>(c_.size()) - 1; }

int Bivariate::degree_y() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

bool Bivariate::is_zero() const { return c_.empty(); }

Bivariate& Bivariate::operator+=(const Bivariate& o) {
    for (int j = 0; j <= o.degree_u(); ++j)
        for (int i = 0; i < static_cast<int>(o.c_[j].size()); ++i) set(i, j, at(i, j) + o.c_[j][i]);
    trim();
    return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& o) {
    for (int j = 0; j <= o.degree_u(); ++j)
        for (int i = 0; i < static_cast<int>(o.c_[j].size()); ++i) set(i, j, at(i, j) - o.c_[j][i]);
    trim();
    return *this;
}

Bivariate& Bivariate::operator*=(const Bivariate& o) {
    Bivariate out;
    for (int j1 = 0; j1 <= degree_u(); ++j1)
        for (int i1 = 0; i1 < static_cast<int>(c_[j1].size()); ++i1) {
            if (c_[j1][i1] == 0) continue;
            for (int j2 = 0; j2 <= o.degree_u(); ++j2)
                for (int i2 = 0; i2 < static_cast<int>(o.c_[j2].size()); ++i2)
                    out.set(i1 + i2, j1 + j2, out.at(i1 + i2, j1 + j2) + c_[j1][i1] * o.c_[j2][i2]);
        }
    out.trim();
    *this = std::move(out);
    return *this;
}

Bivariate& Bivariate::operator*=(const Rational& s) {
    for (auto& row : c_)
        for (auto& v : row) v *= s;
    trim();
    return *this;
}

bool Bivariate::operator==(const Bivariate& o) const { return c_ == o.c_; }

std::vector<cd> Bivariate::in_y(cd u) const {
    std::vector<cd> a(std::max(degree_y() + 1, 0), cd(0.0));
    cd up(1.0);
    for (int j = 0; j <= degree_u(); ++j) {
        for (int i = 0; i < static_cast<int>(c_[j].size()); ++i) a[i] += to_double(c_[j][i]) * up;
        up *= u;
    }
    return a;
}

cd Bivariate::eval(cd y, cd u) const {
    auto a = in_y(u);
    cd acc(0.0);
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * y + a[i];
    return acc;
}

std::string Bivariate::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = degree_u(); j >= 0; --j)
        for (int i = static_cast<int>(c_[j].size()) - 1; i >= 0; --i) {
            const auto& v = c_[j][i];
            if (v == 0) continue;
            os << (first ? "" : " + ") << "(" << finfree::to_string(v) << ")";
            if (i > 0) os << "*y^" << i;
            if (j > 0) os << "*u^" << j;
            first = false;
        }
    return first ? "0" : os.str();
}

Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
Bivariate operator*(Bivariate a, const Bivariate& b) { return a *= b; }
Bivariate operator*(const Rational& s, Bivariate a) { return a *= s; }

// ---------------------------------------------------------------------------
// Curves and moments

AlgebraicCurve curve_from_limits(const std::vector<Rational>& A, const std::vector<Rational>& B) {
    Bivariate left = Bivariate::y();
    for (const auto& b : B) left *= Bivariate::linear(1, 0, b);
    Bivariate right = Bivariate::u() * Bivariate::linear(1, 0, -1);
    for (const auto& a : A) right *= Bivariate::linear(1, 0, a);
    return {left - right, "y prod(y+B) = u (y-1) prod(y+A)"};
}

Bivariate curve_shifted(const std::vector<Rational>& A, const std::vector<Rational>& B, const Rational& c,
                        const Rational& d) {
    if (c == 0) throw Error(ErrorCode::ZeroScale, "curve_shifted needs c != 0");
    // w in the y slot, z in the u slot.
    const Bivariate duw = d * (Bivariate::u() * Bivariate::y());
    Bivariate left = Bivariate::y();
    for (const auto& b : B) left *= duw + Bivariate::linear(0, c, c * (1 + b));
    const int e = static_cast<int>(B.size()) - static_cast<int>(A.size());
    Rational ce = e >= 0 ? ipow(c, e) : Rational(1) / ipow(c, -e);
    Bivariate right = ce * Bivariate::linear(d, 0, c);
    for (const auto& a : A) right *= duw + Bivariate::linear(0, c, c * (1 + a));
    return left - right;
}

std::vector<Rational> moments_from_curve(const AlgebraicCurve& curve, int order) {
    const Bivariate& F = curve.F;
    const int J = F.degree_u();
    const int I = F.degree_y();
    if (J < 0) throw Error(ErrorCode::BranchDegenerate, "zero curve");
    Rational at_one = 0, lambda = 0;
    for (int i = 0; i <= I; ++i) {
        at_one += F.at(i, J);
        lambda += Rational(i) * F.at(i, J);
    }
    if (at_one != 0) throw Error(ErrorCode::BranchDegenerate, "y -> 1 is not a branch at u = infinity");
    if (lambda == 0) throw Error(ErrorCode::BranchDegenerate, "branch y -> 1 at u = infinity is not simple");

    std::vector<Rational> m(order + 1, Rational(0));
    m[0] = 1;
    for (int k = 1; k <= order; ++k) {
        // y(v) = 1 + sum_{l<k} m_l v^l; residual of v^J F(y, 1/v) at order k.
        std::vector<Rational> yv(k + 1, Rational(0));
        yv[0] = 1;
        for (int l = 1; l < k; ++l) yv[l] = m[l];
        std::vector<Rational> power(k + 1, Rational(0));
        power[0] = 1;
        Rational residual = 0;
        for (int i = 0; i <= I; ++i) {
            if (i > 0) power = series_mul(power, yv, k);
            for (int j = 0; j <= J; ++j) {
                const Rational& c = F.at(i, j);
                if (c == 0) continue;
                const int shift = J - j;
                if (shift <= k) residual += c * power[k - shift];
            }
        }
        m[k] = -residual / lambda;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Branch continuation

namespace {

struct CurveDouble {
    std::vector<std::vector<cd>> c;  // c[j][i]

    explicit CurveDouble(const Bivariate& F) {
        c.resize(F.degree_u() + 1);
        for (int j = 0; j <= F.degree_u(); ++j) {
            c[j].assign(F.degree_y() + 1, cd(0.0));
            for (int i = 0; i <= F.degree_y(); ++i) c[j][i] = to_double(F.at(i, j));
        }
    }

    // F, dF/dy, dF/du at (y, u).
    void eval(cd y, cd u, cd& f, cd& fy, cd& fu) const {
        f = fy = fu = 0.0;
        const int J = static_cast<int>(c.size()) - 1;
        // a_i(u) and a_i'(u) by Horner in u.
        const int I = c.empty() ? -1 : static_cast<int>(c[0].size()) - 1;
        for (int i = I; i >= 0; --i) {
            cd a(0.0), da(0.0);
            for (int j = J; j >= 0; --j) {
                da = da * u + a;
                a = a * u + c[j][i];
            }
            fy = fy * y + f;
            f = f * y + a;
            fu = fu * y + da;
        }
    }
};

bool newton(const CurveDouble& cv, cd& y, cd u, double tol, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        cd f, fy, fu;
        cv.eval(y, u, f, fy, fu);
        if (fy == cd(0.0)) return false;
        cd step = f / fy;
        y -= step;
        if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) return false;
        if (std::abs(step) <= tol * (1.0 + std::abs(y))) return true;
    }
    return false;
}

cd track(const CurveDouble& cv, cd y, cd ua, cd ub, const ContinuationOptions& opt, int& steps) {
    const cd delta = ub - ua;
    const double length = std::abs(delta);
    if (length == 0.0) return y;
    double s = 0.0;
    double h = std::min(1.0, 0.25 * (std::abs(ua) + 1e-3) / length);
    cd u = ua;
    while (s < 1.0) {
        const double hs = std::min(h, 1.0 - s);
        const cd u1 = ua + (s + hs) * delta;
        cd f, fy, fu;
        cv.eval(y, u, f, fy, fu);
        const cd yp = (fy == cd(0.0)) ? y : y - fu / fy * (u1 - u);
        cd yn = yp;
        const bool ok = newton(cv, yn, u1, opt.newton_tol, 8) &&
                        std::abs(yn - yp) <= 0.1 * std::abs(yn - y) + 1e-9 * (1.0 + std::abs(y));
        if (ok) {
            s += hs;
            u = u1;
            y = yn;
            h = std::min(1.0, hs * 1.6);
        } else {
            h = hs * 0.5;
            if (h * length < 1e-13 * (1.0 + std::abs(u)))
                throw Error(ErrorCode::BranchJump, "continuation stalled near u = " + std::to_string(u.real()) + "+" +
                                                       std::to_string(u.imag()) + "i");
        }
        if (++steps > opt.max_steps) throw Error(ErrorCode::BranchJump, "continuation step budget exhausted");
    }
    return y;
}

cd seed(const AlgebraicCurve& curve, const CurveDouble& cv, const ContinuationOptions& opt) {
    cd y(1.0);
    try {
        auto m = moments_from_curve(curve, 2);
        y += to_double(m[1]) / opt.start_radius + to_double(m[2]) / (opt.start_radius * opt.start_radius);
    } catch (const Error&) {
    }
    if (!newton(cv, y, cd(opt.start_radius), opt.newton_tol, 50))
        throw Error(ErrorCode::BranchJump, "no simple root near y = 1 at the start radius");
    return y;
}

}  // namespace

std::vector<cd> solve_curve_branch(const AlgebraicCurve& curve, const std::vector<cd>& grid,
                                   const ContinuationOptions& opt) {
    std::vector<cd> out;
    if (grid.empty()) return out;
    CurveDouble cv(curve.F);
    cd y = seed(curve, cv, opt);
    int steps = 0;
    const cd start(opt.start_radius);
    const cd corner(opt.start_radius, grid[0].imag());
    y = track(cv, y, start, corner, opt, steps);
    y = track(cv, y, corner, grid[0], opt, steps);
    out.push_back(y);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        y = track(cv, y, grid[k - 1], grid[k], opt, steps);
        out.push_back(y);
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        cd yk = out[k];
        if (newton(cv, yk, grid[k], 1e-16, 5)) out[k] = yk;
    }
    return out;
}

std::complex<double> boundary_value(const AlgebraicCurve& curve, double x, const std::vector<double>& eps) {
    if (eps.size() < 2) throw Error(ErrorCode::InvalidParameters, "boundary_value needs two eps values");
    ContinuationOptions opt;
    CurveDouble cv(curve.F);
    cd y = seed(curve, cv, opt);
    int steps = 0;
    const double height = 1.0;
    const cd start(opt.start_radius);
    const cd p1(opt.start_radius, height);
    const cd p2(x, height);
    y = track(cv, y, start, p1, opt, steps);
    y = track(cv, y, p1, p2, opt, steps);
    std::vector<cd> ys;
    cd prev = p2;
    for (double e : eps) {
        const cd target(x, e);
        y = track(cv, y, prev, target, opt, steps);
        prev = target;
        ys.push_back(y);
    }
    const double e1 = eps[eps.size() - 2], e2 = eps.back();
    const cd y1 = ys[ys.size() - 2], y2 = ys.back();
    const cd est = y2 + (y2 - y1) * (e2 / (e1 - e2));
    cd polished = est;
    if (newton(cv, polished, cd(x), 1e-15, 40) && std::abs(polished - est) <= 1e-2 * (1.0 + std::abs(est)))
        return polished;
    return est;
}

std::vector<double> stieltjes_density(const AlgebraicCurve& curve, const std::vector<double>& xs,
                                      const std::vector<double>& eps, double scale) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (x == 0.0) throw Error(ErrorCode::InvalidParameters, "stieltjes_density: x = 0 is excluded");
        const cd y = boundary_value(curve, x, eps);
        const double d = -scale * y.imag() / (std::numbers::pi * x);
        if (d < -1e-8) throw Error(ErrorCode::NegativeDensity, "negative density " + std::to_string(d) + " at x = " +
                                                                   std::to_string(x));
        out.push_back(d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form densities

double DensityModel::cdf(double x) const {
    if (x <= lo) return 0.0;
    if (x >= hi) return 1.0;
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(density, lo, x);
}

double DensityModel::mass() const {
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(density, lo, hi);
}

DensityModel density_jp_typeI_r2(const Rational& theta) {
    if (theta <= 0 || theta >= Rational(1, 2))
        throw Error(ErrorCode::ThetaOutOfRange, "JP Type I closed form needs 0 < theta < 1/2");
    const Rational nu_q = (1 / theta) * (1 / theta - 1);
    const Rational ratio = theta * (1 - theta) / ((1 - 2 * theta) * (2 - theta) * (1 + theta));
    const Rational cstar_q = 27 * ratio * ratio;
    const double nu = to_double(nu_q);
    const double cstar = to_double(cstar_q);
    const double kappa = 4.0 / 27.0 * std::pow(1.0 + nu, 3) / (nu * nu);
    const double pref = std::sqrt(3.0) / (2.0 * std::numbers::pi) * std::cbrt(nu / 2.0);
    DensityModel d;
    d.lo = -cstar;
    d.hi = 0.0;
    d.constants = {{"theta", to_double(theta)}, {"nu", nu}, {"kappa", kappa}, {"c_star", cstar}};
    d.density = [cstar, pref](double x) {
        const double t = -x;
        if (t <= 0.0 || t >= cstar) return 0.0;
        const double a = std::sqrt(1.0 + t);
        const double b = std::sqrt((cstar - t) / cstar);
        return pref * (std::cbrt(a + b) - std::cbrt(a - b)) / (std::cbrt(t) * std::cbrt(t) * a);
    };
    return d;
}

DensityModel density_jp_typeII_r2(const Rational& theta) {
    if (theta <= 0 || theta > Rational(1, 2))
        throw Error(ErrorCode::ThetaOutOfRange, "JP Type II closed form needs 0 < theta <= 1/2");
    const double th = to_double(theta);
    const double q = th * (1.0 - th);
    const double kappa = 4.0 * std::pow(1.0 - q, 3) / (27.0 * q * q);
    const double pref = std::sqrt(3.0) / (2.0 * std::numbers::pi) * std::cbrt(q / 2.0);
    DensityModel d;
    d.lo = 0.0;
    d.hi = 1.0;
    d.constants = {{"theta", th}, {"nu", -q}, {"kappa", kappa}};
    d.density = [kappa, pref](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        const double a = std::sqrt(1.0 + (kappa - 1.0) * x);
        const double b = std::sqrt(1.0 - x);
        return pref * (std::cbrt(a + b) + std::cbrt(a - b)) / (std::cbrt(x) * std::cbrt(x) * b);
    };
    return d;
}

Real endpoint_ml1_typeII_r2(const Real& theta) {
    const Real q = theta * (1 - theta);
    const Real base = 1 - 3 * q;
    return 27 * q * q / (9 * q - 2 + 2 * base * sqrt(base));
}

EndpointResult endpoints(const std::string& family, const Rational& p) {
    EndpointResult r;
    r.family = family;
    if (family == "jp1-r2") {
        if (p <= 0 || p >= Rational(1, 2)) throw Error(ErrorCode::ThetaOutOfRange, "jp1-r2 needs 0 < theta < 1/2");
        const Rational ratio = p * (1 - p) / ((1 - 2 * p) * (2 - p) * (1 + p));
        r.exact = 27 * ratio * ratio;
        r.value = to_real(*r.exact);
        r.support_lo = -to_double(*r.exact);
        r.support_hi = 0;
    } else if (family == "ml1-1-r2") {
        if (p <= 0 || p >= Rational(1, 2)) throw Error(ErrorCode::ThetaOutOfRange, "ml1-1-r2 needs 0 < theta < 1/2");
        const Real th = to_real(p);
        const Real q = (1 - th) * th;
        const Real base = 1 - 3 * q;
        r.value = (9 * q - 2 + 2 * sqrt(base * base * base)) / (th * (1 - 2 * th) * (1 - 2 * th));
        r.support_lo = -r.value.convert_to<double>();
        r.support_hi = 0;
    } else if (family == "jp2-r2-a") {
        if (p < 0) throw Error(ErrorCode::InvalidParameters, "jp2-r2-a needs A >= 0");
        const Rational a1 = p + Rational(3, 2), a2 = p + Rational(1, 2);
        r.exact = p * p * p * (p + 1) / (a1 * a1 * a1 * a2);
        r.value = to_real(*r.exact);
        r.support_lo = to_double(*r.exact);
        r.support_hi = 1;
    } else if (family == "jp2-r2-b") {
        if (p < 0) throw Error(ErrorCode::InvalidParameters, "jp2-r2-b needs B >= 0");
        const Rational d = 2 * p + 3;
        r.exact = 27 * (p + 1) * (p + 1) / (d * d * d);
        r.value = to_real(*r.exact);
        r.support_lo = 0;
        r.support_hi = to_double(*r.exact);
    } else if (family == "ml1-2-r2") {
        if (p <= 0 || p >= 1) throw Error(ErrorCode::ThetaOutOfRange, "ml1-2-r2 needs 0 < theta < 1");
        r.value = endpoint_ml1_typeII_r2(to_real(p));
        if (p == Rational(1, 2)) r.exact = Rational(27, 8);
        r.support_lo = 0;
        r.support_hi = r.value.convert_to<double>();
    } else {
        throw Error(ErrorCode::UnknownFamily, family);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Family limits

MopFamily parse_family(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ') s += ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto has = [&](const char* t) { return s == t; };
    if (has("jp1") || has("jp-i") || has("jp-typei") || has("jp1-typei") || has("jpi")) return MopFamily::JP1;
    if (has("jp2") || has("jp-ii") || has("jp-typeii") || has("jp2-typeii") || has("jpii")) return MopFamily::JP2;
    if (has("ml1-1") || has("ml1-i") || has("ml1-typei")) return MopFamily::ML11;
    if (has("ml1-2") || has("ml1-ii") || has("ml1-typeii")) return MopFamily::ML12;
    if (has("ml2-1") || has("ml2-i") || has("ml2-typei")) return MopFamily::ML21;
    if (has("ml2-2") || has("ml2-ii") || has("ml2-typeii")) return MopFamily::ML22;
    throw Error(ErrorCode::UnknownFamily, raw);
}

std::string family_name(MopFamily f) {
    switch (f) {
        case MopFamily::JP1: return "jp-typeI";
        case MopFamily::JP2: return "jp-typeII";
        case MopFamily::ML11: return "ml1-typeI";
        case MopFamily::ML12: return "ml1-typeII";
        case MopFamily::ML21: return "ml2-typeI";
        case MopFamily::ML22: return "ml2-typeII";
    }
    return "unknown";
}

bool is_type_one(MopFamily f) { return f == MopFamily::JP1 || f == MopFamily::ML11 || f == MopFamily::ML21; }

namespace {

void check_theta(const std::vector<Rational>& theta) {
    Rational sum = 0;
    for (const auto& t : theta) {
        if (t <= 0) throw Error(ErrorCode::InvalidParameters, "theta entries must be positive");
        sum += t;
    }
    if (sum != 1) throw Error(ErrorCode::InvalidParameters, "theta entries must sum to 1");
}

void check_c(const std::vector<Rational>& c, std::size_t r) {
    if (c.size() != r) throw Error(ErrorCode::InvalidParameters, "c needs one entry per weight");
    for (std::size_t a = 0; a < c.size(); ++a) {
        if (c[a] <= 0) throw Error(ErrorCode::InvalidParameters, "c entries must be positive");
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (c[a] == c[b]) throw Error(ErrorCode::DuplicateC, "c entries must be distinct");
    }
}

// prod_{l != skip} (c_l u - y - A)
Bivariate ml2_product(const std::vector<Rational>& c, const Rational& A, int skip) {
    Bivariate p = Bivariate::constant(1);
    for (int l = 0; l < static_cast<int>(c.size()); ++l)
        if (l != skip) p *= Bivariate::linear(-1, c[l], -A);
    return p;
}

}  // namespace

FamilyLimit family_curves(MopFamily family, const LimitParams& P) {
    const int r = static_cast<int>(P.theta.size());
    if (r == 0) throw Error(ErrorCode::InvalidParameters, "theta must be non-empty");
    check_theta(P.theta);
    FamilyLimit out;
    out.family = family;
    std::vector<Rational> A = P.A;
    const bool scalar_alpha = family == MopFamily::ML21 || family == MopFamily::ML22;
    if (scalar_alpha) {
        if (A.empty()) A.push_back(0);
        check_c(P.c, r);
    } else {
        if (A.empty()) A.assign(r, Rational(0));
        if (static_cast<int>(A.size()) != r) throw Error(ErrorCode::InvalidParameters, "A needs one entry per weight");
    }
    const int i = P.i - 1;
    if (is_type_one(family) && (i < 0 || i >= r)) throw Error(ErrorCode::InvalidParameters, "component index out of range");

    switch (family) {
        case MopFamily::JP1:
        case MopFamily::ML11: {
            std::vector<Rational> fa, fb;
            for (int j = 0; j < r; ++j) {
                if (j == i) {
                    if (family == MopFamily::JP1) fa.push_back((A[i] + P.B + 1) / P.theta[i]);
                    fb.push_back(A[i] / P.theta[i]);
                } else {
                    fa.push_back((A[i] - A[j] - P.theta[j]) / P.theta[i]);
                    fb.push_back((A[i] - A[j]) / P.theta[i]);
                }
            }
            out.s = s_limit_hyper(fa, fb);
            out.flags = out.s->flags;
            out.curve = curve_from_limits(fa, fb);
            out.scaling = family == MopFamily::JP1 ? "P(x)" : "L(n_i x)";
            break;
        }
        case MopFamily::JP2: {
            std::vector<Rational> fa, fb;
            for (int j = 0; j < r; ++j) {
                fa.push_back((A[j] + P.theta[j]) / (1 + P.B));
                fb.push_back(A[j] / (1 + P.B));
            }
            out.s = s_limit_hyper(fa, fb);
            out.flags = out.s->flags;
            out.curve = curve_from_limits(fa, fb);
            out.zero_mass = P.B;
            out.scaling = "P(x)";
            break;
        }
        case MopFamily::ML12: {
            Bivariate left = Bivariate::u();
            Bivariate right = Bivariate::linear(-1, 1, 0);
            for (int j = 0; j < r; ++j) {
                left *= Bivariate::linear(1, -1, A[j] + P.theta[j]);
                right *= Bivariate::linear(1, -1, A[j]);
            }
            out.curve = {left - right, "u prod(y+A+theta-u) = (u-y) prod(y+A-u)"};
            out.scaling = "L(|n| x)";
            break;
        }
        case MopFamily::ML21: {
            // u = 1/G + sum_k w_k / (G - d_k), rewritten for Y = u G.
            std::vector<Rational> d(r), w(r);
            for (int j = 0; j < r; ++j) {
                if (j == i) {
                    d[j] = P.c[i];
                    w[j] = -(A[0] + 1) / P.theta[i];
                } else {
                    d[j] = P.c[i] - P.c[j];
                    w[j] = P.theta[j] / P.theta[i];
                }
            }
            auto prod_except = [&](int skip) {
                Bivariate p = Bivariate::constant(1);
                for (int l = 0; l < r; ++l)
                    if (l != skip) p *= Bivariate::linear(1, -d[l], 0);
                return p;
            };
            Bivariate full = prod_except(-1);
            Bivariate F = Bivariate::y() * full - full;
            for (int k = 0; k < r; ++k) F -= w[k] * (Bivariate::y() * prod_except(k));
            out.curve = {F, "u = 1/G - (A+1)/(theta_i (G-c_i)) + sum theta_j/(theta_i (G-c_i+c_j)), Y = u G"};
            out.scaling = "L(n_i x)";
            break;
        }
        case MopFamily::ML22: {
            const Rational& a = A[0];
            Bivariate sum;
            for (int j = 0; j < r; ++j) sum += P.theta[j] * ml2_product(P.c, a, j);
            Bivariate F = Bivariate::linear(1, 0, a) * sum - Bivariate::linear(1, 0, -1) * ml2_product(P.c, a, -1);
            out.curve = {F, "(y+A) sum theta_j/(c_j u-(y+A)) = y-1"};
            out.scaling = "L(|n| x)";
            break;
        }
    }
    return out;
}

std::vector<Rational> limit_moments(const FamilyLimit& limit, int order) {
    auto m = moments_from_curve(limit.curve, order);
    if (limit.zero_mass != 0)
        for (int k = 1; k <= order; ++k) m[k] *= 1 + limit.zero_mass;
    return m;
}

}  // namespace finfree
