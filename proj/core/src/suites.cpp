#include "finfree/suites.hpp"

#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"
#include "finfree/hypergeom.hpp"
#include "finfree/partitions.hpp"
#include "finfree/roots_measure.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace finfree {

void Tally::record(bool ok, const std::string& what) {
    ++draws;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
}

int SuiteReport::draws() const {
    int s = 0;
    for (const auto& t : tallies) s += t.draws;
    return s;
}

int SuiteReport::failures() const {
    int s = 0;
    for (const auto& t : tallies) s += t.failures;
    return s;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Random inputs

Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        Rational q = random_rational(rng);
        if (q != 0) return q;
    }
}

// Non-integer rational strictly inside (lo, hi).
Rational random_noninteger(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> den(2, 7);
    for (;;) {
        const int d = den(rng);
        std::uniform_int_distribution<int> num(lo * d + 1, hi * d - 1);
        Rational q(num(rng), d);
        if (denominator(q) != 1) return q;
    }
}

Polynomial random_poly(std::mt19937_64& rng, int n) {
    std::vector<Rational> e(n + 1);
    for (auto& x : e) x = random_rational(rng);
    e[0] = 1;
    return Polynomial(n, e);
}

Polynomial random_rooted(std::mt19937_64& rng, int n) {
    std::vector<Rational> r(n);
    for (auto& x : r) x = random_rational(rng);
    return Polynomial::from_roots(r);
}

std::vector<Rational> random_tuple(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::vector<Rational> t(len(rng));
    for (auto& x : t) x = random_noninteger(rng, -5, 5);
    return t;
}

HypergeometricSpec random_spec(std::mt19937_64& rng, int n, bool any_sign) {
    std::uniform_int_distribution<int> bit(0, 1);
    HypergeometricSpec s;
    s.n = n;
    s.a = random_tuple(rng, 2);
    s.b = random_tuple(rng, 2);
    s.sign = any_sign ? bit(rng) : 0;
    return s;
}

KdFSpec random_kdf(std::mt19937_64& rng, int n, int r) {
    KdFSpec s;
    s.n = n;
    s.a0 = random_tuple(rng, 2);
    s.b0 = random_tuple(rng, 2);
    for (int l = 0; l < r; ++l) {
        s.a.push_back(random_tuple(rng, 2));
        s.b.push_back(random_tuple(rng, 2));
        s.c.push_back(random_nonzero(rng));
    }
    return s;
}

std::string describe_draw(int draw, int n) {
    std::ostringstream os;
    os << "draw " << draw << " n=" << n;
    return os.str();
}

// Runs a check and turns a library error into a recorded failure.
template <class F>
void run_check(Tally& t, const std::string& what, F&& f) {
    try {
        t.record(f(), what);
    } catch (const Error& e) {
        t.record(false, what + ": " + e.what());
    }
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport identity_suite(int max_n, int draws, std::uint64_t seed) {
    if (max_n < 1 || draws < 1) throw Error(ErrorCode::InvalidParameters, "identity_suite: max_n and draws must be positive");
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);
    SuiteReport rep;
    rep.suite = "identities";
    Tally mult_dil{"mult_linear_power_dilates"}, dil_dist{"dilation_distributes_mult"},
        dil_comp{"dilation_composes"}, dil_add{"dilation_distributes_add"}, shift_t{"add_linear_power_shifts"},
        bilinear{"bilinearity"}, thm_a{"hypergeometric_mult_product"}, thm_b{"hypergeometric_add_operators"},
        lemma{"reversed_product_representation"}, kdf1{"kdf_factorization_all_scaled"},
        kdf2{"kdf_factorization_one_variable"};

    for (int draw = 0; draw < draws; ++draw) {
        const int n = 1 + draw % max_n;
        const std::string what = describe_draw(draw, n);
        const Polynomial p = random_poly(rng, n), q = random_poly(rng, n), r = random_poly(rng, n);
        const Rational a = random_nonzero(rng), b = random_nonzero(rng), lambda = random_rational(rng);

        run_check(mult_dil, what, [&] { return mult_conv(p, Polynomial::linear_power(n, a), n) == dilate(p, a); });
        run_check(dil_dist, what, [&] { return check_identity_dilation_distribute(p, q, n, a); });
        run_check(dil_comp, what, [&] { return dilate(dilate(p, a), b) == dilate(p, a * b); });
        run_check(dil_add, what, [&] { return check_identity_dilation_additive(p, q, n, a); });
        run_check(shift_t, what, [&] { return add_conv(p, Polynomial::linear_power(n, a), n) == shift(p, a); });
        run_check(bilinear, what, [&] {
            return mult_conv(lambda * p + q, r, n) == lambda * mult_conv(p, r, n) + mult_conv(q, r, n) &&
                   add_conv(lambda * p + q, r, n) == lambda * add_conv(p, r, n) + add_conv(q, r, n) &&
                   mult_conv(p, r, n) == mult_conv(r, p, n) && add_conv(p, r, n) == add_conv(r, p, n);
        });

        const HypergeometricSpec s1 = random_spec(rng, n, false), s2 = random_spec(rng, n, false);
        run_check(thm_a, what, [&] {
            return hyper_poly(hyper_mult_conv(s1, s2)).scaled(n % 2 ? -1 : 1) ==
                   mult_conv(hyper_poly(s1), hyper_poly(s2), n);
        });
        const HypergeometricSpec u1 = random_spec(rng, n, true), u2 = random_spec(rng, n, true);
        run_check(thm_b, what, [&] { return additive_hg_verify(u1, u2); });

        // the representation needs a full-degree operator product
        HypergeometricSpec v1, v2;
        do {
            v1 = random_spec(rng, n, true);
            v2 = random_spec(rng, n, true);
        } while (symbol_product_polynomial(v1, v2).degree() < n);
        run_check(lemma, what, [&] {
            return proportional(reversed_product_representation(v1, v2), reverse(symbol_product_polynomial(v1, v2)));
        });

        const KdFSpec k = random_kdf(rng, n, 1 + draw % 3);
        run_check(kdf1, what, [&] {
            const auto f = kdf_factorize(k, KdFMode::AllScaled);
            return f.scalar != 0 && kdf_poly(k, KdFMode::AllScaled) == f.tree.evaluate().scaled(f.scalar);
        });
        run_check(kdf2, what, [&] {
            const auto f = kdf_factorize(k, KdFMode::OneVariable);
            return f.scalar != 0 && kdf_poly(k, KdFMode::OneVariable) == f.tree.evaluate().scaled(f.scalar);
        });
    }
    rep.tallies = {mult_dil, dil_dist, dil_comp, dil_add, shift_t, bilinear, thm_a, thm_b, lemma, kdf1, kdf2};
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport cumulant_suite(int max_n, int max_k, int kreweras_order, int draws, std::uint64_t seed) {
    if (max_n < 1 || max_k < 1 || kreweras_order < 1 || draws < 1)
        throw Error(ErrorCode::InvalidParameters, "cumulant_suite: sizes must be positive");
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);
    SuiteReport rep;
    rep.suite = "cumulants";
    Tally additive{"finite_cumulants_additive"}, poly_trip{"finite_cumulants_round_trip"},
        nc_trip{"nc_moment_cumulant_round_trip"}, kreweras_t{"kreweras_vs_s_multiplication"};

    for (int draw = 0; draw < draws; ++draw) {
        const int n = 1 + draw % max_n;
        const std::string what = describe_draw(draw, n);
        const Polynomial p = random_rooted(rng, n), q = random_rooted(rng, n);
        run_check(additive, what, [&] {
            const auto kp = finite_free_cumulants(p), kq = finite_free_cumulants(q);
            const auto ks = finite_free_cumulants(add_conv(p, q, n));
            for (int j = 1; j <= n; ++j)
                if (ks[j] != kp[j] + kq[j]) return false;
            return true;
        });
        run_check(poly_trip, what, [&] { return polynomial_from_finite_cumulants(finite_free_cumulants(p), n) == p; });

        std::vector<Rational> r(max_k + 1);
        for (int j = 1; j <= max_k; ++j) r[j] = random_rational(rng);
        run_check(nc_trip, "draw " + std::to_string(draw), [&] {
            const auto back = cumulants_from_moments_nc(moments_from_cumulants_nc(r, max_k), max_k);
            for (int j = 1; j <= max_k; ++j)
                if (back[j] != r[j]) return false;
            return true;
        });

        // free Poisson of rate lambda times the point mass at a
        const int K = kreweras_order;
        Rational lambda;
        do lambda = random_rational(rng); while (lambda <= 0);
        const Rational a = random_nonzero(rng);
        run_check(kreweras_t, "draw " + std::to_string(draw), [&] {
            std::vector<Rational> r_mp(K + 1, lambda), r_delta(K + 1, Rational(0));
            r_mp[0] = 0;
            r_delta[1] = a;
            const auto via_kreweras = multiplicative_cumulant_product(r_mp, r_delta, K);
            const auto m_mp = moments_from_cumulants_nc(r_mp, K);
            std::vector<Rational> m_delta(K + 1);
            for (int k = 0; k <= K; ++k) m_delta[k] = ipow(a, k);
            const auto via_s = cumulants_from_moments_nc(free_mult(m_mp, m_delta, K), K);
            for (int j = 1; j <= K; ++j)
                if (via_kreweras[j] != via_s[j]) return false;
            return true;
        });
    }
    rep.tallies = {additive, poly_trip, nc_trip, kreweras_t};
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

MopSpec make_spec(MopFamily f, std::vector<Rational> alpha, Rational beta, std::vector<Rational> c = {}) {
    MopSpec s;
    s.family = f;
    s.alpha = std::move(alpha);
    s.beta = std::move(beta);
    s.c = std::move(c);
    return s;
}

// alpha_1 > ... > alpha_r > -1 with alpha_1 - 1 < alpha_r.
std::vector<Rational> step_line_alphas(std::mt19937_64& rng, int r) {
    for (;;) {
        std::vector<Rational> a(r);
        const Rational base = random_noninteger(rng, -1, 1);
        a[r - 1] = base;
        std::uniform_int_distribution<int> num(1, 11);
        for (int j = 0; j + 1 < r; ++j) a[j] = base + Rational(num(rng), 12);
        std::sort(a.begin(), a.end(), [](const Rational& x, const Rational& y) { return x > y; });
        if (std::adjacent_find(a.begin(), a.end()) == a.end()) return a;
    }
}

// (m, ..., m, m+1, ..., m+1) with total in [r, max_total].
MultiIndex step_line_index(std::mt19937_64& rng, int r, int max_total) {
    std::uniform_int_distribution<int> tot(r, std::max(r, max_total));
    const int N = tot(rng);
    MultiIndex n(r, N / r);
    for (int j = r - N % r; j < r; ++j) ++n[j];
    return n;
}

// Pairwise non-integer differences, all above -1.
std::vector<Rational> separated_alphas(std::mt19937_64& rng, int r) {
    for (;;) {
        std::vector<Rational> a(r);
        for (auto& x : a) x = random_noninteger(rng, -1, 2);
        bool ok = true;
        for (int j = 0; j < r && ok; ++j)
            for (int k = 0; k < j && ok; ++k) ok = denominator(Rational(a[j] - a[k])) != 1;
        if (ok) return a;
    }
}

MultiIndex random_index(std::mt19937_64& rng, int r, int max_total) {
    std::uniform_int_distribution<int> d(1, std::max(1, max_total / r));
    MultiIndex n(r);
    for (auto& v : n) v = d(rng);
    return n;
}

std::string describe_index(const MultiIndex& n) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < n.size(); ++j) os << (j ? "," : "") << n[j];
    os << ")";
    return os.str();
}

// The leading verdict carries the theorem's hypotheses; every asserted claim
// whose hypotheses hold must hold.
bool verdicts_hold(const std::vector<TheoremVerdict>& vs, std::string& why) {
    if (vs.empty()) {
        why = "no verdicts";
        return false;
    }
    if (!vs.front().hypotheses) {
        why = vs.front().claim + ": " + vs.front().detail;
        return false;
    }
    for (const auto& v : vs)
        if (v.hypotheses && !v.informational && !v.holds) {
            why = v.claim + ": " + v.detail;
            return false;
        }
    return true;
}

}  // namespace

SuiteReport interlacing_suite(int max_total, int draws, std::uint64_t seed, unsigned bits) {
    if (max_total < 3 || draws < 1) throw Error(ErrorCode::InvalidParameters, "interlacing_suite: max_total >= 3 needed");
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);
    SuiteReport rep;
    rep.suite = "interlacing";
    Tally jp1{"jp_typeI_zero_location"}, ml11{"ml1_typeI_zero_location"}, jp2{"jp_typeII_interlacing"},
        ml12{"ml1_typeII_interlacing"}, ml22{"ml2_typeII_alpha_interlacing"};

    auto record = [](Tally& t, const std::string& what, const std::vector<TheoremVerdict>& vs) {
        std::string why;
        const bool ok = verdicts_hold(vs, why);
        t.record(ok, what + " " + why);
    };

    for (int draw = 0; draw < draws; ++draw) {
        const int r = 1 + draw % 3;
        const Rational t(1 + draw % 4, 2);
        std::uniform_int_distribution<int> comp(1, r);
        for (auto* tally : {&jp1, &ml11}) {
            const MopFamily f = tally == &jp1 ? MopFamily::JP1 : MopFamily::ML11;
            const auto alpha = step_line_alphas(rng, r);
            const Rational beta = random_noninteger(rng, -1, 2);
            const MultiIndex n = step_line_index(rng, r, max_total);
            const int i = comp(rng);
            const std::string what = family_name(f) + " n=" + describe_index(n) + " i=" + std::to_string(i);
            try {
                record(*tally, what, theorem_suite_zero_location(make_spec(f, alpha, beta), n, i, t, bits));
            } catch (const Error& e) {
                tally->record(false, what + ": " + e.what());
            }
        }

        const int i = comp(rng);
        std::vector<Rational> alpha;
        bool shifted_ok = false;
        while (!shifted_ok) {
            alpha = separated_alphas(rng, r);
            shifted_ok = true;
            for (int j = 0; j < r; ++j)
                if (j != i - 1 && denominator(Rational(alpha[i - 1] - alpha[j] + t)) == 1) shifted_ok = false;
        }
        std::uniform_int_distribution<int> small(0, 2);
        const Rational beta = small(rng);
        const MultiIndex n = random_index(rng, r, max_total);
        const std::string where = " n=" + describe_index(n) + " i=" + std::to_string(i);
        try {
            record(jp2, "JP2" + where, theorem_suite_interlacing(make_spec(MopFamily::JP2, alpha, beta), n, i, t, bits));
        } catch (const Error& e) {
            jp2.record(false, "JP2" + where + ": " + e.what());
        }
        try {
            record(ml12, "ML12" + where, theorem_suite_interlacing(make_spec(MopFamily::ML12, alpha, 0), n, i, t, bits));
        } catch (const Error& e) {
            ml12.record(false, "ML12" + where + ": " + e.what());
        }
        std::vector<Rational> c;
        while (static_cast<int>(c.size()) < r) {
            std::uniform_int_distribution<int> num(1, 24);
            const Rational v(num(rng), 4);
            if (std::find(c.begin(), c.end(), v) == c.end()) c.push_back(v);
        }
        try {
            record(ml22, "ML22" + where,
                   theorem_suite_interlacing(make_spec(MopFamily::ML22, {alpha[0]}, 0, c), n, i, t, bits));
        } catch (const Error& e) {
            ml22.record(false, "ML22" + where + ": " + e.what());
        }
    }
    rep.tallies = {jp1, ml11, jp2, ml12, ml22};
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<OrthogonalityRow> orthogonality_suite(int max_total, unsigned bits) {
    const std::vector<Rational> a2{Rational(1, 2), Rational(3, 7)};
    const std::vector<MopSpec> specs{
        make_spec(MopFamily::JP1, a2, 1),
        make_spec(MopFamily::JP2, a2, Rational(1, 3)),
        make_spec(MopFamily::ML11, a2, 0),
        make_spec(MopFamily::ML12, a2, 0),
        make_spec(MopFamily::ML21, {Rational(1, 2)}, 0, {1, 2}),
        make_spec(MopFamily::ML22, {Rational(1, 2)}, 0, {1, 2}),
    };
    std::vector<OrthogonalityRow> rows;
    for (const auto& s : specs)
        for (int n1 = 1; n1 < max_total; ++n1)
            for (int n2 = 1; n1 + n2 <= max_total; ++n2) {
                const MultiIndex n{n1, n2};
                const auto rep = verify_orthogonality(s, n, bits);
                OrthogonalityRow row;
                row.family = s.family;
                row.n = n;
                row.residual = rep.max_residual.convert_to<double>();
                row.normalization = rep.normalization.convert_to<double>();
                row.normalization_ok = rep.normalization_ok;
                rows.push_back(row);
            }
    return rows;
}

// ---------------------------------------------------------------------------

MarchenkoPasturReport marchenko_pastur_chain(int order) {
    MarchenkoPasturReport rep;
    const auto s = s_limit_hyper({}, {Rational(0)});
    rep.s_series = s.series(order);
    for (int k = 0; k < order; ++k) rep.s_expected.push_back(k % 2 ? -1 : 1);

    const auto curve = curve_from_limits({}, {Rational(0)});
    const Bivariate want = Bivariate::y() * Bivariate::y() - Bivariate::u() * Bivariate::y() + Bivariate::u();
    rep.curve_matches = curve.F == want;

    // branch points: zeros in u of the discriminant of F as a quadratic in y
    if (curve.F.degree_y() == 2) {
        const int du = curve.F.degree_u();
        auto coeffs = [&](int i) {
            std::vector<Rational> c(du + 1);
            for (int j = 0; j <= du; ++j) c[j] = curve.F.at(i, j);
            return c;
        };
        const auto qa = coeffs(2), qb = coeffs(1), qc = coeffs(0);
        std::vector<Rational> disc(2 * du + 1);
        for (int j = 0; j <= du; ++j)
            for (int k = 0; k <= du; ++k) disc[j + k] += qb[j] * qb[k] - 4 * qa[j] * qc[k];
        const Polynomial d = Polynomial::from_monomial(disc, -1);
        const Polynomial dd = Polynomial::from_monomial(
            std::vector<Rational>(disc.begin(), disc.begin() + d.degree() + 1), d.degree());
        PrecisionGuard guard(128);
        for (const auto& z : find_roots(dd, 128))
            if (abs(z.im) < Real(1e-30)) rep.support.push_back(z.re.convert_to<double>());
        std::sort(rep.support.begin(), rep.support.end());
    }

    rep.moments_s = moments_from_rational_s(s, order);
    rep.moments_curve = moments_from_curve(curve, order);
    std::vector<Rational> kappa(order + 1, Rational(1));
    kappa[0] = 0;
    rep.moments_nc = moments_from_cumulants_nc(kappa, order);

    rep.density_at_two = stieltjes_density(curve, {2.0})[0];
    std::vector<double> outside;
    for (int k = 1; k <= 20; ++k) outside.push_back(4.0 + 0.1 * k);
    for (double v : stieltjes_density(curve, outside)) rep.density_outside = std::max(rep.density_outside, std::abs(v));
    return rep;
}

// ---------------------------------------------------------------------------

EndpointReport endpoint_suite(int zero_index) {
    EndpointReport rep;
    PrecisionGuard guard(512);
    rep.ml1_typeII_half = *endpoints("ml1-2-r2", Rational(1, 2)).exact;
    for (int e = 2; e <= 12; e += 2) {
        const Real th = pow(Real(10), -e);
        rep.small_theta.push_back(th.convert_to<double>());
        rep.small_theta_value.push_back(endpoint_ml1_typeII_r2(th).convert_to<double>());
    }
    rep.curve_b_zero = endpoints("jp2-r2-b", Rational(0)).value.convert_to<double>();
    rep.curve_a_zero = endpoints("jp2-r2-a", Rational(0)).value.convert_to<double>();
    rep.jp1_third = *endpoints("jp1-r2", Rational(1, 3)).exact;

    const MultiIndex n{zero_index, zero_index};
    const auto spec = make_spec(MopFamily::ML12, {Rational(0), Rational(1, 3)}, 0);
    const Polynomial L = ml1_typeII(spec, n);
    const int bits = schedule_root_precision(L.degree());
    const auto zeros = sorted_real_zeros(L, static_cast<unsigned>(bits), Real(1e-20));
    rep.largest_zero = (zeros.back() / total(n)).convert_to<double>();
    return rep;
}

// ---------------------------------------------------------------------------

bool MomentConvergenceRow::monotone() const {
    for (std::size_t k = 0; k < limit.size(); ++k)
        for (std::size_t s = 1; s < rel_error.size(); ++s)
            if (!(rel_error[s][k] < rel_error[s - 1][k])) return false;
    return true;
}

double MomentConvergenceRow::final_error() const {
    if (rel_error.empty()) return std::numeric_limits<double>::infinity();
    return *std::max_element(rel_error.back().begin(), rel_error.back().end());
}

namespace {

// Variable scaling factor for the finite polynomials of a limit.
Rational scaling_factor(const std::string& scaling, const MultiIndex& n, int i) {
    if (scaling == "P(x)") return 1;
    if (scaling == "L(|n| x)") return total(n);
    if (scaling == "L(n_i x)") return n.at(i - 1);
    throw Error(ErrorCode::InvalidParameters, "unknown scaling " + scaling);
}

}  // namespace

std::vector<MomentConvergenceRow> moment_convergence_suite(const std::vector<int>& sizes) {
    constexpr int K = 3;
    const std::vector<Rational> a2{Rational(1, 2), Rational(3, 7)};
    struct Case {
        std::string label;
        MopSpec spec;
        LimitParams params;
        bool type_one;
    };
    LimitParams jp1;
    jp1.A = {0, 0};
    jp1.theta = {Rational(1, 3), Rational(2, 3)};
    jp1.i = 1;
    LimitParams half;
    half.A = {0, 0};
    half.theta = {Rational(1, 2), Rational(1, 2)};
    LimitParams ml2 = half;
    ml2.A = {0};
    ml2.c = {1, 2};
    const std::vector<Case> cases{
        {"JP-I", make_spec(MopFamily::JP1, a2, 1), jp1, true},
        {"JP-II", make_spec(MopFamily::JP2, a2, 1), half, false},
        {"ML1-II", make_spec(MopFamily::ML12, a2, 0), half, false},
        {"ML2-II", make_spec(MopFamily::ML22, {Rational(1, 2)}, 0, {1, 2}), ml2, false},
    };

    std::vector<MomentConvergenceRow> rows;
    for (const auto& c : cases) {
        MomentConvergenceRow row;
        row.label = c.label;
        const auto lim = family_curves(c.spec.family, c.params);
        const auto lm = limit_moments(lim, K);
        row.limit.assign(lm.begin() + 1, lm.end());
        for (int k : sizes) {
            const MultiIndex n = c.type_one ? MultiIndex{k, 2 * k} : MultiIndex{k / 2, k - k / 2};
            row.indices.push_back(n);
            const Polynomial P = mop_polynomial(c.spec, n, 1);
            const auto m = newton_moments(P, K);
            const Rational scale = scaling_factor(lim.scaling, n, 1);
            std::vector<double> err(K);
            for (int j = 1; j <= K; ++j) {
                const Rational emp = m[j] / ipow(scale, j);
                err[j - 1] = to_double(abs(Rational((emp - row.limit[j - 1]) / row.limit[j - 1])));
            }
            row.rel_error.push_back(err);
        }
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------

namespace {

// Least-squares slope of log f against log t over log-spaced t in [a, b].
double loglog_slope(const std::function<double(double)>& f, double a, double b, int points = 10) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < points; ++k) {
        const double t = a * std::pow(b / a, static_cast<double>(k) / (points - 1));
        const double x = std::log(t), y = std::log(f(t));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (points * sxy - sx * sy) / (points * sxx - sx * sx);
}

}  // namespace

std::vector<DensityCase> density_suite(int grid) {
    struct Item {
        std::string label;
        AlgebraicCurve curve;
        DensityModel model;
        bool typeII;
    };
    std::vector<Item> items;
    LimitParams jp1;
    jp1.A = {0, 0};
    jp1.theta = {Rational(1, 3), Rational(2, 3)};
    items.push_back({"JP-I theta=1/3", family_curves(MopFamily::JP1, jp1).curve, density_jp_typeI_r2(Rational(1, 3)), false});
    for (Rational th : {Rational(1, 3), Rational(1, 2)}) {
        LimitParams p;
        p.A = {0, 0};
        p.theta = {th, 1 - th};
        items.push_back({"JP-II theta=" + to_string(th), family_curves(MopFamily::JP2, p).curve,
                         density_jp_typeII_r2(th), true});
    }

    std::vector<DensityCase> out;
    for (const auto& it : items) {
        DensityCase dc;
        dc.label = it.label;
        const double w = it.model.hi - it.model.lo;
        std::vector<double> xs;
        for (int k = 1; k <= grid; ++k) xs.push_back(it.model.lo + w * k / (grid + 1.0));
        const auto got = stieltjes_density(it.curve, xs);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const double want = it.model.density(xs[k]);
            dc.max_error = std::max(dc.max_error, std::abs(got[k] - want) / std::max(1.0, want));
        }
        dc.mass = it.model.mass();
        if (it.typeII) {
            dc.slope_zero = loglog_slope(it.model.density, 1e-6, 1e-5);
            dc.slope_one = loglog_slope([&](double t) { return it.model.density(1 - t); }, 1e-6, 1e-5);
        } else {
            dc.slope_zero = loglog_slope([&](double t) { return it.model.density(-t); }, 1e-6, 1e-5);
            dc.slope_one = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(dc);
    }
    return out;
}

// ---------------------------------------------------------------------------

ZeroSampleReport jp_typeI_zero_sample(const MultiIndex& n, int precision_bits) {
    if (n.size() != 2) throw Error(ErrorCode::InvalidParameters, "jp_typeI_zero_sample needs r = 2");
    ZeroSampleReport rep;
    const auto spec = make_spec(MopFamily::JP1, {Rational(1, 2), Rational(3, 7)}, 1);
    const Polynomial P = jp_typeI(spec, n, 1);
    rep.precision_bits = precision_bits > 0 ? precision_bits : schedule_root_precision(P.degree());
    PrecisionGuard guard(static_cast<unsigned>(rep.precision_bits));
    const auto roots = find_roots(P, rep.precision_bits);
    rep.count = static_cast<int>(roots.size());
    const Real tau("1e-20");
    rep.all_real = imaginary_margin(roots) < tau;
    rep.all_negative = std::all_of(roots.begin(), roots.end(), [](const Complex& z) { return z.re < 0; });
    for (const auto& z : roots) rep.roots.push_back(z.re);
    std::sort(rep.roots.begin(), rep.roots.end());
    rep.min_root = rep.roots.front().convert_to<double>();
    rep.max_root = rep.roots.back().convert_to<double>();

    const Rational theta = Rational(n[0], n[0] + n[1]);
    rep.c_star = *endpoints("jp1-r2", theta).exact;
    if (rep.all_real) {
        EmpiricalDistribution d;
        d.roots = roots;
        d.precision_bits = rep.precision_bits;
        const auto model = density_jp_typeI_r2(theta);
        rep.ks = ks_distance(d, [&](double x) { return model.cdf(x); }, tau);
    }
    return rep;
}

}  // namespace finfree
