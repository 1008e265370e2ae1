/**
 * @file finfree.cpp
 * @brief Command-line front end: construction, convolution, zeros, limits,
 *        densities and verification suites. Numeric output is CSV with a
 *        JSON sidecar next to it.
 */

#include "finfree/asymptotics.hpp"
#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"
#include "finfree/hypergeom.hpp"
#include "finfree/mop.hpp"
#include "finfree/poly_core.hpp"
#include "finfree/roots_measure.hpp"
#include "finfree/scalar.hpp"
#include "finfree/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef FINFREE_GIT_DESCRIBE
#define FINFREE_GIT_DESCRIBE "unknown"
#endif

using namespace finfree;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;
constexpr int kRootDigits = 40;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::string command;
    unsigned bits = 256;
};

unsigned bits_from_env() {
    const char* env = std::getenv("FINFREE_PREC_BITS");
    if (!env || !*env) return 256;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 32 || v > 1 << 20) throw UsageError("FINFREE_PREC_BITS must be an integer in [32, 2^20]");
    return static_cast<unsigned>(v);
}

// Writes rows to path (or stdout when path is empty or "-") and the sidecar.
void emit_csv(const Context& ctx, const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows, const nlohmann::ordered_json& extra = {}) {
    std::ostringstream os;
    for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << "\n";
    }
    if (path.empty() || path == "-") {
        std::cout << os.str();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << os.str();
    nlohmann::ordered_json side;
    side["command"] = ctx.command;
    side["precision_bits"] = ctx.bits;
    side["git_describe"] = FINFREE_GIT_DESCRIBE;
    side["rows"] = rows.size();
    for (auto it = extra.begin(); it != extra.end(); ++it) side[it.key()] = it.value();
    std::ofstream js(path + ".json", std::ios::binary);
    if (!js) throw UsageError("cannot write " + path + ".json");
    js << side.dump(2) << "\n";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

MultiIndex parse_index(const std::string& text) {
    MultiIndex n;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rational q = parse_rational(item);
        if (denominator(q) != 1 || q < 0) throw UsageError("multi-index entries must be non-negative integers");
        n.push_back(static_cast<int>(numerator(q)));
    }
    if (n.empty()) throw UsageError("empty multi-index");
    return n;
}

std::vector<Rational> parse_list(const std::string& text) {
    return text.empty() ? std::vector<Rational>{} : parse_rational_list(text);
}

Polynomial polynomial_arg(const std::string& coeffs, const std::string& roots, const std::string& json_file,
                          const std::string& which) {
    const int given = !coeffs.empty() + !roots.empty() + !json_file.empty();
    if (given != 1) throw UsageError("give exactly one of --" + which + ", --" + which + "-roots, --" + which + "-json");
    if (!coeffs.empty()) return Polynomial::from_monomial(parse_list(coeffs));
    if (!roots.empty()) return Polynomial::from_roots(parse_list(roots));
    std::ifstream in(json_file);
    if (!in) throw UsageError("cannot read " + json_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return polynomial_from_json(ss.str());
}

std::vector<std::vector<std::string>> coefficient_rows(const Polynomial& p) {
    std::vector<std::vector<std::string>> rows;
    const auto c = p.monomial();
    for (std::size_t k = 0; k < c.size(); ++k) rows.push_back({std::to_string(k), to_string(c[k])});
    return rows;
}

std::vector<std::vector<std::string>> root_rows(const std::vector<Complex>& roots) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < roots.size(); ++k)
        rows.push_back({std::to_string(k), to_string(roots[k].re, kRootDigits), to_string(roots[k].im, kRootDigits)});
    return rows;
}

int effective_bits(const Context& ctx, int degree) {
    return std::max<int>(static_cast<int>(ctx.bits), schedule_root_precision(degree));
}

TypeIIPath parse_path(const std::string& s) {
    if (s == "direct") return TypeIIPath::Direct;
    if (s == "decomposition") return TypeIIPath::Decomposition;
    if (s == "reversed") return TypeIIPath::Reversed;
    if (s == "factorization") return TypeIIPath::FactorizationBis;
    throw UsageError("unknown path " + s);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite free convolution toolkit"};
    app.require_subcommand(1);
    Context ctx;
    for (int k = 0; k < argc; ++k) ctx.command += (k ? " " : "") + std::string(k ? argv[k] : "finfree");

    // hyper
    auto* hyper = app.add_subcommand("hyper", "Terminating hypergeometric polynomial F(-n, a; b; (-1)^l (c x + d))");
    int h_n = 0, h_sign = 0;
    std::string h_a, h_b, h_scale = "1", h_shift = "0", h_emit;
    hyper->add_option("--n", h_n, "Degree")->required()->check(CLI::Range(0, 100000));
    hyper->add_option("--a", h_a, "Upper parameters, comma separated");
    hyper->add_option("--b", h_b, "Lower parameters, comma separated");
    hyper->add_option("--scale", h_scale, "Argument scale c");
    hyper->add_option("--shift", h_shift, "Argument shift d");
    hyper->add_option("--sign", h_sign, "Sign exponent l")->check(CLI::Range(0, 1));
    hyper->add_option("--emit", h_emit, "CSV path (default stdout)");

    // conv
    auto* conv = app.add_subcommand("conv", "Finite free convolution of two polynomials");
    std::string c_op = "add", c_p, c_pr, c_pj, c_q, c_qr, c_qj, c_emit;
    int c_n = -1;
    conv->add_option("--op", c_op, "add or mult")->check(CLI::IsMember({"add", "mult"}));
    conv->add_option("--p", c_p, "p monomial coefficients c0,c1,...");
    conv->add_option("--p-roots", c_pr, "p roots");
    conv->add_option("--p-json", c_pj, "p as JSON file");
    conv->add_option("--q", c_q, "q monomial coefficients");
    conv->add_option("--q-roots", c_qr, "q roots");
    conv->add_option("--q-json", c_qj, "q as JSON file");
    conv->add_option("--n", c_n, "Ambient degree (default: common degree)");
    conv->add_option("--emit", c_emit, "CSV path (default stdout)");

    // roots
    auto* roots = app.add_subcommand("roots", "Zeros of a polynomial");
    std::string r_p, r_pj, r_emit;
    roots->add_option("--p", r_p, "Monomial coefficients c0,c1,...");
    roots->add_option("--p-json", r_pj, "Polynomial JSON file");
    roots->add_option("--emit", r_emit, "CSV path (default stdout)");

    // mop
    auto* mop = app.add_subcommand("mop", "Multiple orthogonal polynomial and its zeros");
    std::string m_family, m_n, m_alpha, m_beta = "0", m_c, m_path = "direct", m_emit, m_coeffs;
    int m_i = 1;
    bool m_no_roots = false;
    mop->add_option("--family", m_family, "jp1-typeI, jp-typeII, ml1-typeI, ml1-typeII, ml2-typeI, ml2-typeII")->required();
    mop->add_option("--n", m_n, "Multi-index n_1,...,n_r")->required();
    mop->add_option("--i", m_i, "Component (Type I), 1-based");
    mop->add_option("--alpha", m_alpha, "alpha_1,...,alpha_r (ML2: a single alpha)")->required();
    mop->add_option("--beta", m_beta, "beta (Jacobi-Pineiro)");
    mop->add_option("--c", m_c, "c_1,...,c_r (ML2)");
    mop->add_option("--path", m_path, "Type II path: direct, decomposition, reversed, factorization");
    mop->add_option("--emit", m_emit, "Zeros CSV path (default stdout)");
    mop->add_option("--emit-coeffs", m_coeffs, "Coefficient CSV path");
    mop->add_flag("--no-roots", m_no_roots, "Skip the zeros");

    // limit
    auto* limit = app.add_subcommand("limit", "Limit zero distribution: curve and moments");
    std::string l_family, l_theta, l_A, l_B = "0", l_c, l_emit;
    int l_i = 1, l_order = 8;
    limit->add_option("--family", l_family, "One of the six families")->required();
    limit->add_option("--theta", l_theta, "theta_1,...,theta_r summing to 1")->required();
    limit->add_option("--A", l_A, "alpha limits (default zeros)");
    limit->add_option("--B", l_B, "beta limit");
    limit->add_option("--c", l_c, "c limits (ML2)");
    limit->add_option("--i", l_i, "Component (Type I)");
    limit->add_option("--order", l_order, "Number of moments")->check(CLI::Range(1, 40));
    limit->add_option("--emit", l_emit, "Moments CSV path (default stdout)");

    // density
    auto* density = app.add_subcommand("density", "Limit density on a grid");
    std::string d_family, d_theta, d_A, d_B = "0", d_c, d_emit;
    int d_grid = 200, d_i = 1;
    double d_lo = 0, d_hi = 0;
    density->add_option("--family", d_family, "jp1-r2, jp2-r2 (closed forms) or a family name (curve inversion)")
        ->required();
    density->add_option("--theta", d_theta, "theta (r = 2 closed forms) or theta_1,...,theta_r")->required();
    density->add_option("--A", d_A, "alpha limits for curve inversion");
    density->add_option("--B", d_B, "beta limit for curve inversion");
    density->add_option("--c", d_c, "c limits for curve inversion");
    density->add_option("--i", d_i, "Component (Type I)");
    density->add_option("--grid", d_grid, "Interior grid points")->check(CLI::Range(1, 1000000));
    density->add_option("--lo", d_lo, "Grid start (curve inversion)");
    density->add_option("--hi", d_hi, "Grid end (curve inversion)");
    density->add_option("--emit", d_emit, "CSV path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string v_suite;
    int v_n = 0, v_draws = 0;
    std::uint64_t v_seed = 1;
    double v_tol = 1e-25;
    std::string v_emit;
    verify->add_option("--suite", v_suite, "identities, cumulants, orthogonality, interlacing")
        ->required()
        ->check(CLI::IsMember({"identities", "cumulants", "orthogonality", "interlacing"}));
    verify->add_option("--n", v_n, "Size bound (degree or |n|)")->check(CLI::Range(1, 64));
    verify->add_option("--draws", v_draws, "Random draws per check")->check(CLI::Range(1, 100000));
    verify->add_option("--seed", v_seed, "Random seed");
    verify->add_option("--tol", v_tol, "Orthogonality residual tolerance");
    verify->add_option("--emit", v_emit, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        ctx.bits = bits_from_env();
        PrecisionGuard guard(ctx.bits);

        if (*hyper) {
            HypergeometricSpec s;
            s.n = h_n;
            s.a = parse_list(h_a);
            s.b = parse_list(h_b);
            s.scale = parse_rational(h_scale);
            s.shift = parse_rational(h_shift);
            s.sign = h_sign;
            const Polynomial p = hyper_poly(s);
            emit_csv(ctx, h_emit, {"power", "coefficient"}, coefficient_rows(p), {{"spec", describe(s)}});
            return 0;
        }

        if (*conv) {
            const Polynomial p = polynomial_arg(c_p, c_pr, c_pj, "p"), q = polynomial_arg(c_q, c_qr, c_qj, "q");
            const int n = c_n >= 0 ? c_n : p.n();
            const Polynomial pn = p.with_ambient(n), qn = q.with_ambient(n);
            const Polynomial r = c_op == "add" ? add_conv(pn, qn, n) : mult_conv(pn, qn, n);
            emit_csv(ctx, c_emit, {"power", "coefficient"}, coefficient_rows(r),
                     {{"op", c_op}, {"n", n}, {"result", nlohmann::json::parse(to_json(r))}});
            return 0;
        }

        if (*roots) {
            const Polynomial p = polynomial_arg(r_p, "", r_pj, "p");
            const int bits = effective_bits(ctx, p.degree());
            PrecisionGuard g(static_cast<unsigned>(bits));
            const auto z = find_roots(p, bits);
            emit_csv(ctx, r_emit, {"index", "re", "im"}, root_rows(z),
                     {{"root_precision_bits", bits}, {"imaginary_margin", to_string(imaginary_margin(z), 6)}});
            return 0;
        }

        if (*mop) {
            MopSpec spec;
            spec.family = parse_family(m_family);
            spec.alpha = parse_list(m_alpha);
            spec.beta = parse_rational(m_beta);
            spec.c = parse_list(m_c);
            const MultiIndex n = parse_index(m_n);
            Polynomial P;
            switch (spec.family) {
                case MopFamily::JP2: P = jp_typeII(spec, n, parse_path(m_path)); break;
                case MopFamily::ML12: P = ml1_typeII(spec, n, parse_path(m_path)); break;
                case MopFamily::ML22: P = ml2_typeII(spec, n, parse_path(m_path)); break;
                default: P = mop_polynomial(spec, n, m_i); break;
            }
            nlohmann::ordered_json extra{{"family", family_name(spec.family)}, {"n", n}, {"degree", P.degree()}};
            if (is_type_one(spec.family)) extra["i"] = m_i;
            if (!m_coeffs.empty()) emit_csv(ctx, m_coeffs, {"power", "coefficient"}, coefficient_rows(P), extra);
            if (m_no_roots) return 0;
            const int bits = effective_bits(ctx, P.degree());
            PrecisionGuard g(static_cast<unsigned>(bits));
            const auto z = find_roots(P, bits);
            const Real margin = imaginary_margin(z);
            extra["root_precision_bits"] = bits;
            extra["imaginary_margin"] = to_string(margin, 6);
            if (!z.empty()) {
                Real lo = z.front().re, hi = z.front().re;
                for (const auto& w : z) {
                    lo = std::min<Real>(lo, w.re);
                    hi = std::max<Real>(hi, w.re);
                }
                extra["min_re"] = to_string(lo, 20);
                extra["max_re"] = to_string(hi, 20);
            }
            emit_csv(ctx, m_emit, {"index", "re", "im"}, root_rows(z), extra);
            if (!m_emit.empty() && m_emit != "-") {
                std::cout << "zeros " << z.size() << ", imaginary margin " << to_string(margin, 3);
                if (extra.contains("min_re"))
                    std::cout << ", min " << extra["min_re"].get<std::string>() << ", max "
                              << extra["max_re"].get<std::string>();
                std::cout << "\n";
            }
            return 0;
        }

        if (*limit) {
            const MopFamily f = parse_family(l_family);
            LimitParams p;
            p.theta = parse_list(l_theta);
            p.A = parse_list(l_A);
            if (p.A.empty()) p.A.assign(f == MopFamily::ML21 || f == MopFamily::ML22 ? 1 : p.theta.size(), Rational(0));
            p.B = parse_rational(l_B);
            p.c = parse_list(l_c);
            p.i = l_i;
            const auto lim = family_curves(f, p);
            const auto m = limit_moments(lim, l_order);
            std::vector<std::vector<std::string>> rows;
            for (std::size_t k = 0; k < m.size(); ++k) rows.push_back({std::to_string(k), to_string(m[k])});
            emit_csv(ctx, l_emit, {"k", "moment"}, rows,
                     {{"family", family_name(f)},
                      {"curve", lim.curve.F.to_string()},
                      {"scaling", lim.scaling},
                      {"zero_mass", to_string(lim.zero_mass)},
                      {"flags", lim.flags.describe()}});
            return 0;
        }

        if (*density) {
            std::vector<double> xs, ys;
            nlohmann::ordered_json extra{{"family", d_family}, {"theta", d_theta}};
            if (d_family == "jp1-r2" || d_family == "jp2-r2") {
                const Rational th = parse_rational(d_theta);
                const DensityModel model = d_family == "jp1-r2" ? density_jp_typeI_r2(th) : density_jp_typeII_r2(th);
                for (int k = 1; k <= d_grid; ++k) {
                    const double x = model.lo + (model.hi - model.lo) * k / (d_grid + 1.0);
                    xs.push_back(x);
                    ys.push_back(model.density(x));
                }
                extra["support"] = {model.lo, model.hi};
                extra["method"] = "closed form";
            } else {
                const MopFamily f = parse_family(d_family);
                if (!(d_hi > d_lo)) throw UsageError("curve inversion needs --lo < --hi");
                LimitParams p;
                p.theta = parse_list(d_theta);
                p.A = parse_list(d_A);
                if (p.A.empty())
                    p.A.assign(f == MopFamily::ML21 || f == MopFamily::ML22 ? 1 : p.theta.size(), Rational(0));
                p.B = parse_rational(d_B);
                p.c = parse_list(d_c);
                p.i = d_i;
                const auto lim = family_curves(f, p);
                for (int k = 1; k <= d_grid; ++k) xs.push_back(d_lo + (d_hi - d_lo) * k / (d_grid + 1.0));
                ys = stieltjes_density(lim.curve, xs);
                extra["support"] = {d_lo, d_hi};
                extra["method"] = "curve inversion";
                extra["curve"] = lim.curve.F.to_string();
            }
            std::vector<std::vector<std::string>> rows;
            for (std::size_t k = 0; k < xs.size(); ++k) rows.push_back({fmt(xs[k]), fmt(ys[k])});
            emit_csv(ctx, d_emit, {"x", "density"}, rows, extra);
            return 0;
        }

        if (*verify) {
            SuiteReport rep;
            std::vector<std::vector<std::string>> rows;
            int failures = 0;
            if (v_suite == "orthogonality") {
                const auto all = orthogonality_suite(v_n ? v_n : 6, ctx.bits);
                for (const auto& r : all) {
                    const bool ok = r.residual < v_tol && r.normalization_ok;
                    failures += !ok;
                    std::ostringstream idx;
                    for (std::size_t j = 0; j < r.n.size(); ++j) idx << (j ? " " : "") << r.n[j];
                    rows.push_back({family_name(r.family), idx.str(), fmt(r.residual), bool_str(r.normalization_ok),
                                    bool_str(ok)});
                }
                emit_csv(ctx, v_emit, {"family", "n", "residual", "normalization_ok", "passed"}, rows,
                         {{"suite", v_suite}, {"tolerance", v_tol}, {"failures", failures}});
            } else {
                if (v_suite == "identities") rep = identity_suite(v_n ? v_n : 8, v_draws ? v_draws : 100, v_seed);
                if (v_suite == "cumulants")
                    rep = cumulant_suite(v_n ? v_n : 6, 6, 4, v_draws ? v_draws : 100, v_seed);
                if (v_suite == "interlacing")
                    rep = interlacing_suite(v_n ? v_n : 9, v_draws ? v_draws : 20, v_seed, ctx.bits);
                for (const auto& t : rep.tallies)
                    rows.push_back({t.name, std::to_string(t.draws), std::to_string(t.failures)});
                failures = rep.failures();
                emit_csv(ctx, v_emit, {"check", "draws", "failures"}, rows,
                         {{"suite", v_suite}, {"seed", v_seed}, {"failures", failures}});
                for (const auto& t : rep.tallies)
                    if (t.failures) std::cerr << t.name << ": " << t.first_failure << "\n";
            }
            if (failures) {
                std::cerr << "verify " << v_suite << ": " << failures << " failures\n";
                return kExitNumeric;
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::ParseError:
            case ErrorCode::UnknownFamily:
            case ErrorCode::InvalidParameters:
            case ErrorCode::ThetaOutOfRange:
            case ErrorCode::DuplicateC:
            case ErrorCode::NonIntegerBetaPath:
                std::cerr << "usage error: " << e.what() << "\n";
                return kExitUsage;
            default:
                std::cerr << "numeric error: " << e.what() << "\n";
                return kExitNumeric;
        }
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
