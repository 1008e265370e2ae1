#include "finfree/mop.hpp"

#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"
#include "finfree/hypergeom.hpp"
#include "finfree/roots_measure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace finfree {

namespace {

using boost::multiprecision::abs;

bool is_int(const Rational& q) { return denominator(q) == 1; }

const Rational& alpha_of(const MopSpec& s, int j) { return s.alpha.at(j); }

void check_component(const MopSpec& spec, const MultiIndex& n, int i) {
    validate(spec, n);
    if (i < 1 || i > spec.r()) throw Error(ErrorCode::InvalidParameters, "component index out of range");
    if (n[i - 1] < 1) throw Error(ErrorCode::InvalidParameters, "Type I component needs n_i >= 1");
}

Polynomial constant_one() { return Polynomial(0, {Rational(1)}); }

Polynomial fold_mult(const std::vector<Polynomial>& blocks, int m) {
    if (m == 0) return constant_one();
    Polynomial acc = blocks.at(0);
    for (std::size_t k = 1; k < blocks.size(); ++k) acc = mult_conv(acc, blocks[k], m);
    return acc;
}

Polynomial fold_add(const std::vector<Polynomial>& blocks, int m) {
    if (m == 0) return constant_one();
    Polynomial acc = blocks.at(0);
    for (std::size_t k = 1; k < blocks.size(); ++k) acc = add_conv(acc, blocks[k], m);
    return acc;
}

// Exact quotient by (1-x)^k; throws if the division leaves a remainder.
Polynomial divide_one_minus_x(const Polynomial& p, int k, int ambient) {
    std::vector<Rational> c = p.monomial();
    for (int step = 0; step < k; ++step) {
        const int d = static_cast<int>(c.size()) - 1;
        // p = (1 - x) q  gives  c_j = q_j - q_{j-1}
        std::vector<Rational> q(std::max(d, 1));
        Rational prev = 0;
        for (int j = 0; j < d; ++j) {
            q[j] = c[j] + prev;
            prev = q[j];
        }
        if (c[d] != -prev) throw Error(ErrorCode::InvalidParameters, "(1-x) does not divide the polynomial");
        if (d == 0) q = {Rational(0)};
        c = std::move(q);
    }
    c.resize(ambient + 1);
    return Polynomial::from_monomial(c, ambient);
}

// Coefficients of the product of two series truncated at order.
std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
    std::vector<Rational> c(order + 1);
    for (int k = 0; k <= order; ++k)
        for (int l = 0; l <= k; ++l) c[k] += a[l] * b[k - l];
    return c;
}

Polynomial monic_from_ascending(const std::vector<Rational>& c, int n) {
    const Polynomial p = Polynomial::from_monomial(c, n);
    if (p.degree() != n) throw Error(ErrorCode::DegreeDeficient, "leading coefficient vanishes");
    return p.monic();
}

std::vector<Rational> alpha_plus(const MopSpec& s, const Rational& t) {
    std::vector<Rational> a = s.alpha;
    for (auto& x : a) x += t;
    return a;
}

}  // namespace

int total(const MultiIndex& n) {
    int s = 0;
    for (int v : n) s += v;
    return s;
}

MultiIndex shifted(const MultiIndex& n, int i, int d) {
    MultiIndex m = n;
    m.at(i - 1) += d;
    return m;
}

int MopSpec::r() const {
    if (family == MopFamily::ML21 || family == MopFamily::ML22) return static_cast<int>(c.size());
    return static_cast<int>(alpha.size());
}

void validate(const MopSpec& spec, const MultiIndex& n) {
    const int r = spec.r();
    if (r < 1) throw Error(ErrorCode::InvalidParameters, "at least one weight is required");
    if (static_cast<int>(n.size()) != r) throw Error(ErrorCode::InvalidParameters, "multi-index length differs from r");
    for (int v : n)
        if (v < 0) throw Error(ErrorCode::InvalidParameters, "negative multi-index entry");
    if (total(n) < 1) throw Error(ErrorCode::InvalidParameters, "|n| must be positive");
    switch (spec.family) {
        case MopFamily::ML21:
        case MopFamily::ML22:
            if (spec.alpha.empty() || spec.alpha[0] <= -1) throw Error(ErrorCode::InvalidParameters, "alpha > -1 required");
            for (std::size_t j = 0; j < spec.c.size(); ++j) {
                if (spec.c[j] <= 0) throw Error(ErrorCode::InvalidParameters, "c_j > 0 required");
                for (std::size_t k = 0; k < j; ++k)
                    if (spec.c[j] == spec.c[k]) throw Error(ErrorCode::DuplicateC, "c entries must be distinct");
            }
            break;
        default:
            for (int j = 0; j < r; ++j) {
                if (spec.alpha[j] <= -1) throw Error(ErrorCode::InvalidParameters, "alpha_j > -1 required");
                for (int k = 0; k < j; ++k)
                    if (is_int(spec.alpha[j] - spec.alpha[k]))
                        throw Error(ErrorCode::InvalidParameters, "alpha differences must be non-integer");
            }
            if ((spec.family == MopFamily::JP1 || spec.family == MopFamily::JP2) && spec.beta <= -1)
                throw Error(ErrorCode::InvalidParameters, "beta > -1 required");
    }
}

// ---------------------------------------------------------------------------
// Type I

Polynomial jp_typeI(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int N = total(n), m = n[i - 1] - 1;
    const Rational& ai = alpha_of(spec, i - 1);
    std::vector<Rational> a{ai + spec.beta + N}, b{ai + 1};
    for (int j = 0; j < spec.r(); ++j) {
        if (j == i - 1) continue;
        a.push_back(ai + 1 - spec.alpha[j] - n[j]);
        b.push_back(ai + 1 - spec.alpha[j]);
    }
    return hyper_poly_unchecked(m, a, b, 1);
}

Real jp_typeI_constant(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int N = total(n);
    const Rational& ai = alpha_of(spec, i - 1);
    Rational q = factorial(n[i - 1] - 1);
    Rational num = 1;
    for (int k = 0; k < spec.r(); ++k) {
        num *= rising(spec.alpha[k] + spec.beta + N, n[k]);
        if (k != i - 1) q *= rising(spec.alpha[k] - ai, n[k]);
    }
    if ((N - 1) % 2) num = -num;
    using boost::multiprecision::tgamma;
    const Real g = tgamma(to_real(ai + spec.beta + N)) / (tgamma(to_real(spec.beta + N)) * tgamma(to_real(ai + 1)));
    return g * to_real(num / q);
}

std::vector<Polynomial> jp_typeI_blocks(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int N = total(n), m = n[i - 1] - 1;
    const Rational& ai = alpha_of(spec, i - 1);
    std::vector<Polynomial> out;
    for (int j = 0; j < spec.r(); ++j) {
        if (j == i - 1)
            out.push_back(hyper_poly_unchecked(m, {ai + spec.beta + N}, {ai + 1}, 1));
        else
            out.push_back(hyper_poly_unchecked(m, {ai - spec.alpha[j] - n[j] + 1}, {ai - spec.alpha[j] + 1}, 1));
    }
    return out;
}

Polynomial jp_typeI_decomposition(const MopSpec& spec, const MultiIndex& n, int i) {
    return fold_mult(jp_typeI_blocks(spec, n, i), n[i - 1] - 1);
}

Polynomial ml1_typeI(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int m = n[i - 1] - 1;
    const Rational& ai = alpha_of(spec, i - 1);
    std::vector<Rational> a, b{ai + 1};
    for (int j = 0; j < spec.r(); ++j) {
        if (j == i - 1) continue;
        a.push_back(ai + 1 - spec.alpha[j] - n[j]);
        b.push_back(ai + 1 - spec.alpha[j]);
    }
    return hyper_poly_unchecked(m, a, b, 1);
}

Real ml1_typeI_constant(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int N = total(n);
    const Rational& ai = alpha_of(spec, i - 1);
    Rational q = factorial(n[i - 1] - 1);
    for (int j = 0; j < spec.r(); ++j)
        if (j != i - 1) q *= rising(spec.alpha[j] - ai, n[j]);
    using boost::multiprecision::tgamma;
    Real v = 1 / (tgamma(to_real(ai + 1)) * to_real(q));
    return (N - 1) % 2 ? Real(-v) : v;
}

std::vector<Polynomial> ml1_typeI_blocks(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int m = n[i - 1] - 1;
    const Rational& ai = alpha_of(spec, i - 1);
    std::vector<Polynomial> out;
    for (int j = 0; j < spec.r(); ++j) {
        if (j == i - 1)
            out.push_back(hyper_poly_unchecked(m, {}, {ai + 1}, 1));
        else
            out.push_back(hyper_poly_unchecked(m, {ai - spec.alpha[j] - n[j] + 1}, {ai - spec.alpha[j] + 1}, 1));
    }
    return out;
}

Polynomial ml1_typeI_decomposition(const MopSpec& spec, const MultiIndex& n, int i) {
    return fold_mult(ml1_typeI_blocks(spec, n, i), n[i - 1] - 1);
}

Polynomial ml1_typeI_bridge(const MopSpec& spec, const MultiIndex& n, int i) {
    MopSpec jp = spec;
    jp.family = MopFamily::JP1;
    const Polynomial p = jp_typeI(jp, n, i);
    const int m = n[i - 1] - 1;
    if (m == 0) return constant_one();
    const Polynomial v = hyper_poly_unchecked(m, {}, {alpha_of(spec, i - 1) + spec.beta + total(n)}, 1);
    return mult_conv(v, p, m);
}

std::vector<Polynomial> ml2_typeI_blocks(const MopSpec& spec, const MultiIndex& n, int i) {
    check_component(spec, n, i);
    const int N = total(n), m = n[i - 1] - 1;
    const Rational& ci = spec.c.at(i - 1);
    std::vector<Polynomial> out;
    for (int j = 0; j < spec.r(); ++j) {
        if (j == i - 1)
            out.push_back(hyper_poly_unchecked(m, {}, {spec.alpha[0] + 1 + N - n[i - 1]}, ci));
        else
            out.push_back(hyper_poly_unchecked(m, {}, {Rational(-n[j] - n[i - 1] + 2)}, ci - spec.c[j]));
    }
    return out;
}

Polynomial ml2_typeI(const MopSpec& spec, const MultiIndex& n, int i) {
    return fold_add(ml2_typeI_blocks(spec, n, i), n[i - 1] - 1);
}

// ---------------------------------------------------------------------------
// Type II

std::vector<Polynomial> jp_typeII_blocks(const MopSpec& spec, const MultiIndex& n, bool factored_form) {
    validate(spec, n);
    if (!is_int(spec.beta) || spec.beta < 0)
        throw Error(ErrorCode::NonIntegerBetaPath, "block decomposition needs integer beta >= 0");
    const int N = total(n);
    const int M = N + static_cast<int>(numerator(spec.beta));
    std::vector<Polynomial> out;
    for (int j = 0; j < spec.r(); ++j) {
        const Rational& aj = spec.alpha[j];
        if (!factored_form) {
            const Polynomial f = hyper_poly_unchecked(M, {aj + n[j] + 1}, {aj + 1}, 1);
            out.push_back((rising(aj + 1, n[j]) / factorial(n[j])) * f);
        } else {
            const Polynomial f = hyper_poly_unchecked(n[j], {Rational(M) + aj + 1}, {aj + 1}, 1);
            // (1-x)^k = (-1)^k (x-1)^k
            const Rational sign = (M - n[j]) % 2 ? -1 : 1;
            out.push_back(sign * multiply(Polynomial::linear_power(M - n[j], 1), f).with_ambient(M));
        }
    }
    return out;
}

Polynomial jp_typeII(const MopSpec& spec, const MultiIndex& n, TypeIIPath path) {
    validate(spec, n);
    const int N = total(n);
    switch (path) {
        case TypeIIPath::Direct: {
            std::vector<Rational> num{-N - spec.beta}, den;
            for (int j = 0; j < spec.r(); ++j) {
                num.push_back(spec.alpha[j] + n[j] + 1);
                den.push_back(spec.alpha[j] + 1);
            }
            const auto f = hyper_series(num, den, 1, N);
            const auto g = hyper_series({spec.beta}, {}, 1, N);
            return monic_from_ascending(series_product(g, f, N), N);
        }
        case TypeIIPath::Decomposition: {
            const auto blocks = jp_typeII_blocks(spec, n, false);
            const int M = N + static_cast<int>(numerator(spec.beta));
            const Polynomial prod = fold_mult(blocks, M);
            return divide_one_minus_x(prod, M - N, N).monic();
        }
        case TypeIIPath::Reversed: {
            const Rational NN = N;
            const Polynomial p = hyper_poly_unchecked(N, {Rational(1)}, {}, Rational(-1) / NN);
            const Polynomial f1 = hyper_poly_unchecked(N, {}, {-spec.beta - N + 1}, -NN);
            const Polynomial f2 = hyper_poly_unchecked(N, {}, {spec.beta + 1}, NN);
            std::vector<Rational> a, b;
            for (int j = 0; j < spec.r(); ++j) {
                a.push_back(-NN - spec.alpha[j]);
                b.push_back(-NN - n[j] - spec.alpha[j]);
            }
            const Polynomial q = hyper_poly_unchecked(N, a, b, -1);
            const Polynomial inner = add_conv(f1, mult_conv(f2, q, N), N);
            const Polynomial out = mult_conv(reverse(p), reverse(inner), N);
            if (out.degree() != N) throw Error(ErrorCode::DegreeDeficient, "reversed path lost degree");
            return out.monic();
        }
        default:
            throw Error(ErrorCode::InvalidParameters, "path not available for Jacobi-Pineiro Type II");
    }
}

Polynomial ml1_typeII(const MopSpec& spec, const MultiIndex& n, TypeIIPath path) {
    validate(spec, n);
    const int N = total(n);
    switch (path) {
        case TypeIIPath::Direct: {
            std::vector<Rational> num, den;
            for (int j = 0; j < spec.r(); ++j) {
                num.push_back(spec.alpha[j] + n[j] + 1);
                den.push_back(spec.alpha[j] + 1);
            }
            const auto f = hyper_series(num, den, -1, N);
            const auto g = hyper_series({}, {}, 1, N);
            return monic_from_ascending(series_product(g, f, N), N);
        }
        case TypeIIPath::Reversed: {
            HypergeometricSpec s;
            s.n = N;
            s.scale = 1;
            s.shift = 1;
            for (int j = 0; j < spec.r(); ++j) {
                s.a.push_back(-Rational(N) - spec.alpha[j]);
                s.b.push_back(-Rational(N) - n[j] - spec.alpha[j]);
            }
            const Polynomial p = hyper_poly_unchecked(N, {Rational(1)}, {}, 1);
            const Polynomial star = mult_conv(p, hyper_poly(s), N);
            const Polynomial out = reverse(star);
            if (out.degree() != N) throw Error(ErrorCode::DegreeDeficient, "reversed path lost degree");
            return out.monic();
        }
        default:
            throw Error(ErrorCode::InvalidParameters, "path not available for multiple Laguerre Type II (first kind)");
    }
}

Polynomial ml2_typeII(const MopSpec& spec, const MultiIndex& n, TypeIIPath path) {
    validate(spec, n);
    const int N = total(n);
    const Rational& a = spec.alpha[0];
    switch (path) {
        case TypeIIPath::Direct: {
            // h_K = sum over |k| = K of prod C(n_j, k_j) / c_j^{k_j}
            std::vector<Rational> h{Rational(1)};
            for (int j = 0; j < spec.r(); ++j) {
                std::vector<Rational> next(h.size() + n[j]);
                for (std::size_t u = 0; u < h.size(); ++u)
                    for (int k = 0; k <= n[j]; ++k) next[u + k] += h[u] * binomial(n[j], k) / ipow(spec.c[j], k);
                h = std::move(next);
            }
            std::vector<Rational> e(N + 1);
            for (int K = 0; K <= N; ++K) e[K] = falling(a + N, K) * h[K];
            return Polynomial(N, std::move(e));
        }
        case TypeIIPath::Decomposition: {
            std::vector<Polynomial> blocks;
            for (int j = 0; j < spec.r(); ++j) {
                std::vector<Rational> e(N + 1);
                for (int k = 0; k <= std::min(N, n[j]); ++k)
                    e[k] = falling(Rational(N), k) * falling(Rational(n[j]), k) / (factorial(k) * ipow(spec.c[j], k));
                blocks.push_back(Polynomial(N, std::move(e)));
            }
            const Polynomial q =
                (falling(a + N, N) / factorial(N)) * hyper_poly_unchecked(N, {Rational(1)}, {a + 1}, 1);
            return mult_conv(q, fold_add(blocks, N), N);
        }
        case TypeIIPath::FactorizationBis: {
            std::vector<Rational> roots;
            for (int j = 0; j < spec.r(); ++j)
                for (int k = 0; k < n[j]; ++k) roots.push_back(1 / spec.c[j]);
            const Polynomial q = falling(a + N, N) * hyper_poly_unchecked(N, {}, {a + 1}, 1);
            return mult_conv(q, Polynomial::from_roots(roots), N);
        }
        default:
            throw Error(ErrorCode::InvalidParameters, "path not available for multiple Laguerre Type II (second kind)");
    }
}

Polynomial mop_polynomial(const MopSpec& spec, const MultiIndex& n, int i) {
    switch (spec.family) {
        case MopFamily::JP1: return jp_typeI(spec, n, i);
        case MopFamily::ML11: return ml1_typeI(spec, n, i);
        case MopFamily::ML21: return ml2_typeI(spec, n, i);
        case MopFamily::JP2: return jp_typeII(spec, n);
        case MopFamily::ML12: return ml1_typeII(spec, n);
        case MopFamily::ML22: return ml2_typeII(spec, n);
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family");
}

// ---------------------------------------------------------------------------
// Gauss rules

namespace {

// Monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}; b[0] holds mu_0.
struct Recurrence {
    std::vector<Rational> a, b;
    Real mu0;
};

GaussRule gauss_from_recurrence(const Recurrence& rec, int N, unsigned bits) {
    Eigen::VectorXd diag(N), sub(std::max(N - 1, 0));
    for (int k = 0; k < N; ++k) diag[k] = to_double(rec.a[k]);
    for (int k = 1; k < N; ++k) sub[k - 1] = std::sqrt(to_double(rec.b[k]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::QuadratureFailure, "tridiagonal eigensolver failed");

    std::vector<Real> ra(N), rb(N);
    for (int k = 0; k < N; ++k) {
        ra[k] = to_real(rec.a[k]);
        rb[k] = k ? to_real(rec.b[k]) : Real(0);
    }
    const Real eps = pow(Real(2), -static_cast<int>(bits) + 12);

    GaussRule rule;
    for (int m = 0; m < N; ++m) {
        Real t = solver.eigenvalues()[m];
        bool converged = false;
        for (int it = 0; it < 100 && !converged; ++it) {
            Real p0 = 0, p1 = 1, d0 = 0, d1 = 0;
            for (int k = 0; k < N; ++k) {
                Real p2 = (t - ra[k]) * p1 - rb[k] * p0;
                Real d2 = p1 + (t - ra[k]) * d1 - rb[k] * d0;
                p0 = std::move(p1);
                p1 = std::move(p2);
                d0 = std::move(d1);
                d1 = std::move(d2);
            }
            if (d1 == 0) break;
            const Real step = p1 / d1;
            t -= step;
            converged = abs(step) <= eps * (1 + abs(t));
        }
        if (!converged) throw Error(ErrorCode::QuadratureFailure, "Newton polish of a Gauss node did not converge");
        // w = 1 / sum_k p_k(t)^2 / ||p_k||^2 with ||p_k||^2 = mu_0 b_1 ... b_k
        Real p0 = 0, p1 = 1, norm = rec.mu0, s = 1 / rec.mu0;
        for (int k = 0; k + 1 < N; ++k) {
            Real p2 = (t - ra[k]) * p1 - rb[k] * p0;
            p0 = std::move(p1);
            p1 = std::move(p2);
            norm *= rb[k + 1];
            s += p1 * p1 / norm;
        }
        rule.nodes.push_back(t);
        rule.weights.push_back(1 / s);
    }
    for (int m = 1; m < N; ++m)
        if (!(rule.nodes[m] > rule.nodes[m - 1]))
            throw Error(ErrorCode::QuadratureFailure, "Gauss nodes collapsed during refinement");
    return rule;
}

}  // namespace

GaussRule gauss_jacobi01(const Rational& a, const Rational& b, int nodes, unsigned bits) {
    if (a <= -1 || b <= -1) throw Error(ErrorCode::InvalidParameters, "Jacobi exponents must exceed -1");
    if (nodes < 1) throw Error(ErrorCode::InvalidParameters, "at least one node");
    PrecisionGuard guard(bits);
    // standard Jacobi on [-1,1] with (1-t)^as (1+t)^bs, then x = (1+t)/2
    const Rational as = b, bs = a, s = as + bs;
    Recurrence rec;
    rec.a.resize(nodes);
    rec.b.resize(nodes);
    for (int k = 0; k < nodes; ++k) {
        const Rational at = k == 0 ? Rational((bs - as) / (s + 2))
                                    : Rational((bs * bs - as * as) / ((2 * k + s) * (2 * k + s + 2)));
        rec.a[k] = (1 + at) / 2;
        if (k == 0) continue;
        const Rational bt = k == 1 ? Rational(4 * (1 + as) * (1 + bs) / ((2 + s) * (2 + s) * (3 + s)))
                                   : Rational(4 * k * (k + as) * (k + bs) * (k + s) /
                                              ((2 * k + s) * (2 * k + s) * (2 * k + s + 1) * (2 * k + s - 1)));
        rec.b[k] = bt / 4;
    }
    using boost::multiprecision::tgamma;
    rec.mu0 = tgamma(to_real(a + 1)) * tgamma(to_real(b + 1)) / tgamma(to_real(a + b + 2));
    return gauss_from_recurrence(rec, nodes, bits);
}

GaussRule gauss_laguerre(const Rational& a, const Rational& c, int nodes, unsigned bits) {
    if (a <= -1) throw Error(ErrorCode::InvalidParameters, "Laguerre exponent must exceed -1");
    if (c <= 0) throw Error(ErrorCode::InvalidParameters, "Laguerre rate must be positive");
    if (nodes < 1) throw Error(ErrorCode::InvalidParameters, "at least one node");
    PrecisionGuard guard(bits);
    Recurrence rec;
    rec.a.resize(nodes);
    rec.b.resize(nodes);
    for (int k = 0; k < nodes; ++k) {
        rec.a[k] = (2 * k + a + 1) / c;
        if (k) rec.b[k] = k * (k + a) / (c * c);
    }
    using boost::multiprecision::tgamma;
    rec.mu0 = tgamma(to_real(a + 1)) / pow(to_real(c), to_real(a + 1));
    return gauss_from_recurrence(rec, nodes, bits);
}

Real evaluate_real(const Polynomial& p, const Real& x) {
    const auto c = p.monomial();
    Real acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_real(*it);
    return acc;
}

Real family_weight(const MopSpec& spec, int j, const Real& x) {
    switch (spec.family) {
        case MopFamily::JP1:
        case MopFamily::JP2: return pow(x, to_real(spec.alpha.at(j))) * pow(1 - x, to_real(spec.beta));
        case MopFamily::ML11:
        case MopFamily::ML12: return pow(x, to_real(spec.alpha.at(j))) * exp(-x);
        case MopFamily::ML21:
        case MopFamily::ML22: return pow(x, to_real(spec.alpha.at(0))) * exp(-to_real(spec.c.at(j)) * x);
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family");
}

GaussRule family_rule(const MopSpec& spec, int j, int nodes, unsigned bits) {
    switch (spec.family) {
        case MopFamily::JP1:
        case MopFamily::JP2: return gauss_jacobi01(spec.alpha.at(j), spec.beta, nodes, bits);
        case MopFamily::ML11:
        case MopFamily::ML12: return gauss_laguerre(spec.alpha.at(j), 1, nodes, bits);
        case MopFamily::ML21:
        case MopFamily::ML22: return gauss_laguerre(spec.alpha.at(0), spec.c.at(j), nodes, bits);
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family");
}

// ---------------------------------------------------------------------------
// Orthogonality

namespace {

// sum_i w_i f(x_i) x_i^k and the matching sum of absolute terms, k = 0..K-1.
void moments_against(const GaussRule& rule, const Polynomial& p, const Real& scale, int K, std::vector<Real>& sum,
                     std::vector<Real>& abs_sum) {
    for (std::size_t m = 0; m < rule.nodes.size(); ++m) {
        const Real f = scale * rule.weights[m] * evaluate_real(p, rule.nodes[m]);
        Real xp = 1;
        for (int k = 0; k < K; ++k) {
            const Real term = f * xp;
            sum[k] += term;
            abs_sum[k] += abs(term);
            xp *= rule.nodes[m];
        }
    }
}

std::vector<Polynomial> typeI_components(const MopSpec& spec, const MultiIndex& n) {
    std::vector<Polynomial> out;
    for (int j = 1; j <= spec.r(); ++j) {
        if (n[j - 1] == 0) {
            out.push_back(Polynomial::zero(0));
            continue;
        }
        out.push_back(mop_polynomial(spec, n, j));
    }
    return out;
}

// Solve the dense system A x = b by Gaussian elimination with partial pivoting.
std::vector<Real> solve_dense(std::vector<std::vector<Real>> A, std::vector<Real> b) {
    const int m = static_cast<int>(b.size());
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        if (A[piv][col] == 0) throw Error(ErrorCode::QuadratureFailure, "singular system for Type I scalars");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < m; ++r) {
            const Real f = A[r][col] / A[col][col];
            for (int k = col; k < m; ++k) A[r][k] -= f * A[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<Real> x(m);
    for (int r = m - 1; r >= 0; --r) {
        Real s = b[r];
        for (int k = r + 1; k < m; ++k) s -= A[r][k] * x[k];
        x[r] = s / A[r][r];
    }
    return x;
}

struct TypeISetup {
    std::vector<Polynomial> comps;
    std::vector<GaussRule> rules;
    std::vector<Real> scalars;
    int nodes = 0;
};

TypeISetup typeI_setup(const MopSpec& spec, const MultiIndex& n, unsigned bits) {
    TypeISetup s;
    const int N = total(n), r = spec.r();
    s.nodes = 2 * N + 20;
    s.comps = typeI_components(spec, n);
    for (int j = 0; j < r; ++j) s.rules.push_back(family_rule(spec, j, s.nodes, bits));
    s.scalars.assign(r, Real(0));
    if (spec.family == MopFamily::JP1) {
        for (int j = 0; j < r; ++j)
            if (n[j] > 0) s.scalars[j] = jp_typeI_constant(spec, n, j + 1);
    } else if (spec.family == MopFamily::ML11) {
        for (int j = 0; j < r; ++j)
            if (n[j] > 0) s.scalars[j] = ml1_typeI_constant(spec, n, j + 1);
    } else {
        // no closed-form constants: fix s_1 = 1 and solve the first r-1 conditions
        s.scalars[0] = 1;
        if (r > 1) {
            std::vector<std::vector<Real>> M(r, std::vector<Real>(r - 1, Real(0)));
            for (int j = 0; j < r; ++j) {
                std::vector<Real> sum(r - 1, Real(0)), as(r - 1, Real(0));
                moments_against(s.rules[j], s.comps[j], 1, r - 1, sum, as);
                for (int k = 0; k < r - 1; ++k) M[j][k] = sum[k];
            }
            std::vector<std::vector<Real>> A(r - 1, std::vector<Real>(r - 1));
            std::vector<Real> b(r - 1);
            for (int k = 0; k < r - 1; ++k) {
                for (int j = 1; j < r; ++j) A[k][j - 1] = M[j][k];
                b[k] = -M[0][k];
            }
            const auto x = solve_dense(A, b);
            for (int j = 1; j < r; ++j) s.scalars[j] = x[j - 1];
        }
    }
    return s;
}

}  // namespace

OrthogonalityReport verify_orthogonality(const MopSpec& spec, const MultiIndex& n, unsigned bits) {
    validate(spec, n);
    PrecisionGuard guard(bits);
    OrthogonalityReport rep;
    const int N = total(n), r = spec.r();
    if (is_type_one(spec.family)) {
        const TypeISetup s = typeI_setup(spec, n, bits);
        rep.nodes = s.nodes;
        rep.scalars = s.scalars;
        std::vector<Real> sum(N, Real(0)), as(N, Real(0));
        for (int j = 0; j < r; ++j) moments_against(s.rules[j], s.comps[j], s.scalars[j], N, sum, as);
        for (int k = 0; k + 1 < N; ++k) {
            ++rep.conditions;
            const Real res = as[k] == 0 ? Real(0) : Real(abs(sum[k]) / as[k]);
            if (res > rep.max_residual) rep.max_residual = res;
        }
        rep.normalization = sum[N - 1];
        rep.normalization_ok = as[N - 1] > 0 && abs(sum[N - 1]) > as[N - 1] * Real(1e-10);
    } else {
        const Polynomial P = mop_polynomial(spec, n);
        rep.nodes = 2 * N + 20;
        for (int j = 0; j < r; ++j) {
            if (n[j] == 0) continue;
            const GaussRule rule = family_rule(spec, j, rep.nodes, bits);
            std::vector<Real> sum(n[j], Real(0)), as(n[j], Real(0));
            moments_against(rule, P, 1, n[j], sum, as);
            for (int k = 0; k < n[j]; ++k) {
                ++rep.conditions;
                const Real res = as[k] == 0 ? Real(0) : Real(abs(sum[k]) / as[k]);
                if (res > rep.max_residual) rep.max_residual = res;
            }
        }
    }
    return rep;
}

std::vector<Real> typeI_function_eval(const MopSpec& spec, const MultiIndex& n, const std::vector<Real>& xs,
                                      unsigned bits) {
    validate(spec, n);
    if (!is_type_one(spec.family)) throw Error(ErrorCode::InvalidParameters, "Type I family required");
    PrecisionGuard guard(bits);
    const TypeISetup s = typeI_setup(spec, n, bits);
    std::vector<Real> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        Real q = 0;
        for (int j = 0; j < spec.r(); ++j) q += s.scalars[j] * evaluate_real(s.comps[j], x) * family_weight(spec, j, x);
        out.push_back(q);
    }
    return out;
}

int sign_changes(const std::vector<Real>& values) {
    int changes = 0, last = 0;
    for (const auto& v : values) {
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// ---------------------------------------------------------------------------
// Zero theorems

std::vector<Real> sorted_real_zeros(const Polynomial& p, unsigned bits, const Real& tau) {
    const int d = p.degree();
    if (d < 0) throw Error(ErrorCode::ZeroDegree, "zero polynomial has no zero set");
    if (d == 0) return {};
    const Polynomial q = p.with_ambient(d);
    const int prec = std::max<int>(static_cast<int>(bits), schedule_root_precision(d));
    PrecisionGuard guard(prec);
    return real_roots(find_roots(q, prec), tau);
}

namespace {

const Real& root_tau() {
    static thread_local Real tau;
    tau = Real(1e-20);
    return tau;
}

// p before q in the merged chain; false with a reason on any failure.
bool chain_holds(const Polynomial& p, const Polynomial& q, unsigned bits, std::string& why) {
    try {
        const auto pr = sorted_real_zeros(p, bits, root_tau());
        const auto qr = sorted_real_zeros(q, bits, root_tau());
        if (interlaces(pr, qr, root_tau()).holds()) return true;
        why = "zeros do not interlace";
    } catch (const Error& e) {
        why = e.what();
    }
    return false;
}

std::string rat(const Rational& q) { return to_string(q); }

bool pairwise_non_integer(const std::vector<Rational>& a) {
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < j; ++k)
            if (is_int(a[j] - a[k])) return false;
    return true;
}

// alpha_1 - 1 < alpha_i < min_j (alpha_j + n_j) - n_i + 1
bool window_condition(const std::vector<Rational>& a, const MultiIndex& n, int i) {
    Rational lo = a[0] - 1, hi = a[0] + n[0];
    for (std::size_t j = 1; j < a.size(); ++j) hi = std::min(hi, Rational(a[j] + n[j]));
    hi = hi - n[i - 1] + 1;
    return lo < a[i - 1] && a[i - 1] < hi;
}

bool weakened_condition(const std::vector<Rational>& a, const MultiIndex& n, int i) {
    const int r = static_cast<int>(a.size());
    const Rational& ai = a[i - 1];
    for (int j = 1; j <= r; ++j) {
        if (j == i) continue;
        const Rational& aj = a[j - 1];
        if (!(aj - 2 < ai && ai < aj + n[j - 1] - n[i - 1] + 2)) continue;
        bool ok = true;
        for (int k = 1; k <= r && ok; ++k) {
            if (k == i || k == j) continue;
            if (!(a[k - 1] - 1 < ai)) ok = false;
            if (!(ai < a[k - 1] + n[k - 1] - n[i - 1] + 1)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool in_delta(const std::vector<Real>& zeros, MopFamily f, int r) {
    for (const auto& z : zeros) {
        if (r == 1) {
            if (!(z > 0)) return false;
            if (f == MopFamily::JP1 && !(z < 1)) return false;
        } else if (r % 2 == 0) {
            if (!(z < 0)) return false;
        } else if (!(z > 0)) {
            return false;
        }
    }
    return true;
}

TheoremVerdict verdict(std::string claim, bool hyp, bool informational = false) {
    TheoremVerdict v;
    v.claim = std::move(claim);
    v.hypotheses = hyp;
    v.informational = informational;
    return v;
}

void evaluate_chain(TheoremVerdict& v, const Polynomial& p, const Polynomial& q, unsigned bits) {
    std::string why;
    v.holds = chain_holds(p, q, bits, why);
    v.detail = v.holds ? "interlacing verified" : why;
}

}  // namespace

std::vector<TheoremVerdict> theorem_suite_zero_location(const MopSpec& spec, const MultiIndex& n, int i,
                                                        const Rational& t, unsigned bits) {
    if (spec.family != MopFamily::JP1 && spec.family != MopFamily::ML11)
        throw Error(ErrorCode::InvalidParameters, "zero-location suite covers Jacobi-Pineiro and Laguerre (first kind) Type I");
    check_component(spec, n, i);
    const bool jp = spec.family == MopFamily::JP1;
    const int r = spec.r();
    const auto& a = spec.alpha;

    bool ordered = a.back() > -1;
    for (int j = 1; j < r; ++j) ordered = ordered && a[j - 1] > a[j];
    const bool base = ordered && pairwise_non_integer(a) && (!jp || spec.beta > -1);
    const bool window = window_condition(a, n, i);
    const bool t_ok = t > 0 && t <= 2;
    const bool hyp = base && window;

    const Polynomial P = mop_polynomial(spec, n, i);
    std::vector<TheoremVerdict> out;

    {
        auto v = verdict("zeros in Delta_r", hyp);
        try {
            const auto z = sorted_real_zeros(P, bits, root_tau());
            v.holds = in_delta(z, spec.family, r);
            v.detail = v.holds ? "all zeros real and in Delta_r" : "a zero lies outside Delta_r";
        } catch (const Error& e) {
            v.detail = e.what();
        }
        out.push_back(std::move(v));
    }

    const bool even = r % 2 == 0;
    {
        MopSpec shifted_spec = spec;
        shifted_spec.alpha = alpha_plus(spec, t);
        const Polynomial Pt = mop_polynomial(shifted_spec, n, i);
        auto v = verdict(even ? "alpha+t: P(alpha+t) <= P(alpha)" : "alpha+t: P(alpha) <= P(alpha+t)", hyp && t_ok);
        auto w = verdict(even ? "alpha+t reversed: P(alpha) <= P(alpha+t)" : "alpha+t reversed: P(alpha+t) <= P(alpha)",
                         hyp && t_ok, true);
        if (even) {
            evaluate_chain(v, Pt, P, bits);
            evaluate_chain(w, P, Pt, bits);
        } else {
            evaluate_chain(v, P, Pt, bits);
            evaluate_chain(w, Pt, P, bits);
        }
        out.push_back(std::move(v));
        out.push_back(std::move(w));
    }

    if (jp) {
        MopSpec sb = spec;
        sb.beta += t;
        const Polynomial Pb = mop_polynomial(sb, n, i);
        auto v = verdict(even ? "beta+t: P(beta) <= P(beta+t)" : "beta+t: P(beta+t) <= P(beta)", hyp && t_ok);
        auto w = verdict(even ? "beta+t reversed: P(beta+t) <= P(beta)" : "beta+t reversed: P(beta) <= P(beta+t)",
                         hyp && t_ok, true);
        if (even) {
            evaluate_chain(v, P, Pb, bits);
            evaluate_chain(w, Pb, P, bits);
        } else {
            evaluate_chain(v, Pb, P, bits);
            evaluate_chain(w, P, Pb, bits);
        }
        out.push_back(std::move(v));
        out.push_back(std::move(w));
    }

    if (n[i - 1] >= 2) {
        MopSpec sd = spec;
        sd.alpha[i - 1] += 1;
        if (jp) sd.beta += 1;
        const MultiIndex m = shifted(n, i, -1);
        const Polynomial D = mop_polynomial(sd, m, i);
        auto v = verdict("derivative: P(n) <= P(n-e_i) with alpha+e_i", hyp);
        const bool prop = proportional(P.derivative(), D.with_ambient(P.n() - 1));
        evaluate_chain(v, P, D, bits);
        if (!prop) {
            v.holds = false;
            v.detail = "shifted polynomial is not proportional to the derivative";
        }
        out.push_back(std::move(v));
    }

    {
        const bool weak = base && weakened_condition(a, n, i);
        auto v = verdict("weakened condition: real zeros", weak);
        try {
            sorted_real_zeros(P, bits, root_tau());
            v.holds = true;
            v.detail = "all zeros real";
        } catch (const Error& e) {
            v.detail = e.what();
        }
        out.push_back(std::move(v));
    }

    std::ostringstream os;
    os << "alpha=(";
    for (int j = 0; j < r; ++j) os << (j ? "," : "") << rat(a[j]);
    os << ") window=" << (window ? "yes" : "no");
    for (auto& v : out)
        if (!v.hypotheses && v.detail.find("hypotheses") == std::string::npos)
            v.detail = "hypotheses false (" + os.str() + "); " + v.detail;
    return out;
}

std::vector<TheoremVerdict> theorem_suite_interlacing(const MopSpec& spec, const MultiIndex& n, int i,
                                                      const Rational& t, unsigned bits) {
    validate(spec, n);
    if (is_type_one(spec.family)) throw Error(ErrorCode::InvalidParameters, "interlacing suite covers Type II families");
    const int r = spec.r();
    if (i < 1 || i > r) throw Error(ErrorCode::InvalidParameters, "component index out of range");
    std::vector<TheoremVerdict> out;
    const Polynomial P = mop_polynomial(spec, n);

    if (spec.family == MopFamily::ML22) {
        const bool hyp = spec.alpha[0] > -1 && t > 0 && t <= 2;
        MopSpec st = spec;
        st.alpha[0] += t;
        auto v = verdict("L(alpha) <= L(alpha+t)", hyp);
        evaluate_chain(v, P, mop_polynomial(st, n), bits);
        out.push_back(std::move(v));
        return out;
    }

    const bool jp = spec.family == MopFamily::JP2;
    bool hyp = pairwise_non_integer(spec.alpha) && t >= 0 && t <= 2;
    for (int j = 0; j < r; ++j) {
        hyp = hyp && spec.alpha[j] > -1;
        if (j != i - 1) hyp = hyp && !is_int(spec.alpha[i - 1] - spec.alpha[j] + t);
    }
    if (jp) hyp = hyp && is_int(spec.beta) && spec.beta >= 0;

    const Polynomial Pup = mop_polynomial(spec, shifted(n, i, 1));
    {
        auto v = verdict("P(n+e_i) <= P(n)", hyp);
        evaluate_chain(v, Pup, P, bits);
        out.push_back(std::move(v));
    }
    {
        MopSpec st = spec;
        st.alpha[i - 1] += t;
        auto v = verdict("P(n) <= P(n) with alpha+t e_i", hyp);
        evaluate_chain(v, P, mop_polynomial(st, n), bits);
        out.push_back(std::move(v));
    }
    if (jp) {
        for (int s = 1; s <= 2; ++s) {
            MopSpec sb = spec;
            sb.beta += s;
            const Polynomial Pb = mop_polynomial(sb, n);
            auto v = verdict("P(n+e_i) <= P(n) with beta+" + std::to_string(s), hyp);
            evaluate_chain(v, Pup, Pb, bits);
            out.push_back(std::move(v));
            auto w = verdict("P(n) with beta+" + std::to_string(s) + " <= P(n)", hyp);
            evaluate_chain(w, Pb, P, bits);
            out.push_back(std::move(w));
        }
    }
    for (auto& v : out)
        if (!v.hypotheses) v.detail = "hypotheses false; " + v.detail;
    return out;
}

}  // namespace finfree
