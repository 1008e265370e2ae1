#include "finfree/hypergeom.hpp"

#include "finfree/error.hpp"
#include "finfree/finfree_conv.hpp"

#include <sstream>

namespace finfree {

namespace {

Rational rising_tuple(const std::vector<Rational>& t, unsigned k) {
    Rational r = 1;
    for (const auto& x : t) r *= rising(x, k);
    return r;
}

bool is_nonpositive_integer_in(const Rational& x, int lo_abs) {
    // x in {0, -1, ..., -lo_abs}
    if (denominator(x) != 1) return false;
    return x <= 0 && x >= -lo_abs;
}

std::vector<Rational> shifted(const std::vector<Rational>& t, const Rational& d) {
    std::vector<Rational> out = t;
    for (auto& x : out) x += d;
    return out;
}

std::vector<Rational> reflected(const std::vector<Rational>& t, int n) {
    // x -> -x - n + 1
    std::vector<Rational> out;
    out.reserve(t.size());
    for (const auto& x : t) out.push_back(-x - n + 1);
    return out;
}

void require_plain_argument(const HypergeometricSpec& s, const char* op) {
    if (s.scale != 1 || s.shift != 0)
        throw Error(ErrorCode::InvalidParameters, std::string(op) + " needs the argument (-1)^l x");
}

std::vector<Rational> truncated_product(const std::vector<Rational>& u, const std::vector<Rational>& v, int order) {
    std::vector<Rational> w(order + 1);
    for (int i = 0; i <= order && i < static_cast<int>(u.size()); ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(v.size()); ++j) w[i + j] += u[i] * v[j];
    }
    return w;
}

// w(m) = (a)_m / (b)_m c^m / m!, m = 0..n
std::vector<Rational> kdf_weights(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& c,
                                  int n) {
    std::vector<Rational> w(n + 1);
    Rational term = 1;
    for (int m = 0; m <= n; ++m) {
        w[m] = term;
        Rational num = c;
        for (const auto& x : a) num *= x + m;
        Rational den = m + 1;
        for (const auto& x : b) den *= x + m;
        if (den == 0) {
            if (m < n) throw Error(ErrorCode::InadmissibleDenominator, "zero denominator in a KdF weight");
            break;
        }
        term *= num / den;
    }
    return w;
}

void check_kdf_admissible(const KdFSpec& s) {
    auto check = [&](const std::vector<Rational>& b) {
        for (const auto& x : b)
            if (is_nonpositive_integer_in(x, s.n))
                throw Error(ErrorCode::InadmissibleDenominator, "denominator parameter " + to_string(x));
    };
    check(s.b0);
    for (const auto& t : s.b) check(t);
    if (s.a.size() != s.c.size() || s.b.size() != s.c.size())
        throw Error(ErrorCode::InvalidParameters, "KdF tuples must match the number of multipliers");
}

std::vector<Rational> head_sequence(const KdFSpec& s) {
    // (-n)_k (a0)_k / (b0)_k
    std::vector<Rational> t(s.n + 1);
    for (int k = 0; k <= s.n; ++k)
        t[k] = rising(Rational(-s.n), k) * rising_tuple(s.a0, k) / rising_tuple(s.b0, k);
    return t;
}

HypergeometricSpec reflected_leaf(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                  const Rational& scale) {
    HypergeometricSpec q;
    q.n = n;
    q.a = reflected(b, n);
    q.b = reflected(a, n);
    q.scale = scale;
    q.sign = static_cast<int>((a.size() + b.size()) % 2);
    return q;
}

ConvExpr leaf(HypergeometricSpec s) {
    ConvExpr e;
    e.kind = ConvExpr::Kind::Leaf;
    e.leaf = std::move(s);
    return e;
}

ConvExpr node(ConvExpr::Kind kind, std::vector<ConvExpr> children) {
    ConvExpr e;
    e.kind = kind;
    e.children = std::move(children);
    return e;
}

std::string tuple_string(const std::vector<Rational>& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += to_string(t[i]);
    }
    return out;
}

}  // namespace

Rational rising(const Rational& a, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a + i;
    return r;
}

Rational falling(const Rational& a, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a - i;
    return r;
}

bool admissible(const HypergeometricSpec& s) {
    for (const auto& x : s.b)
        if (is_nonpositive_integer_in(x, s.n)) return false;
    return true;
}

bool full_degree(const HypergeometricSpec& s) {
    for (const auto& x : s.a)
        if (is_nonpositive_integer_in(x, s.n - 1)) return false;
    return true;
}

Polynomial hyper_poly_unchecked(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                const Rational& z_scale) {
    if (n < 0) throw Error(ErrorCode::InvalidParameters, "negative degree");
    std::vector<Rational> c(n + 1);
    Rational term = 1;
    for (int k = 0; k <= n; ++k) {
        c[k] = term;
        if (k == n) break;
        Rational num = z_scale * (k - n);
        for (const auto& x : a) num *= x + k;
        Rational den = k + 1;
        for (const auto& x : b) den *= x + k;
        if (den == 0) {
            if (num != 0) throw Error(ErrorCode::InadmissibleDenominator, "zero denominator reached");
            for (int m = k + 1; m <= n; ++m) c[m] = 0;
            break;
        }
        term *= num / den;
    }
    return Polynomial::from_monomial(c, n);
}

Polynomial hyper_poly(const HypergeometricSpec& s) {
    if (!admissible(s)) throw Error(ErrorCode::InadmissibleDenominator, describe(s));
    const Rational sgn = s.sign % 2 ? Rational(-1) : Rational(1);
    if (s.shift == 0) return hyper_poly_unchecked(s.n, s.a, s.b, sgn * s.scale);
    // sum_k t_k (sgn (c x + d))^k
    auto t = hyper_poly_unchecked(s.n, s.a, s.b, Rational(1)).monomial();
    std::vector<Rational> c(s.n + 1);
    const Rational cs = sgn * s.scale, ds = sgn * s.shift;
    for (int k = 0; k <= s.n; ++k) {
        if (t[k] == 0) continue;
        Rational cpow = 1;
        for (int m = 0; m <= k; ++m) {
            c[m] += t[k] * binomial(k, m) * cpow * ipow(ds, k - m);
            cpow *= cs;
        }
    }
    return Polynomial::from_monomial(c, s.n);
}

HypergeometricSpec hyper_derivative(const HypergeometricSpec& s) {
    if (s.n < 1) throw Error(ErrorCode::ZeroDegree, "derivative of a degree-0 hypergeometric polynomial");
    HypergeometricSpec d = s;
    d.n = s.n - 1;
    d.a = shifted(s.a, 1);
    d.b = shifted(s.b, 1);
    return d;
}

HypergeometricSpec hyper_mult_conv(const HypergeometricSpec& s1, const HypergeometricSpec& s2) {
    if (s1.n != s2.n) throw Error(ErrorCode::DegreeMismatch, "hyper_mult_conv needs equal n");
    require_plain_argument(s1, "hyper_mult_conv");
    require_plain_argument(s2, "hyper_mult_conv");
    if (s1.sign != 0 || s2.sign != 0) throw Error(ErrorCode::InvalidParameters, "hyper_mult_conv needs sign 0");
    HypergeometricSpec r;
    r.n = s1.n;
    r.a = s1.a;
    r.a.insert(r.a.end(), s2.a.begin(), s2.a.end());
    r.b = s1.b;
    r.b.insert(r.b.end(), s2.b.begin(), s2.b.end());
    return r;
}

std::vector<Rational> hyper_series(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                   const Rational& z_scale, int order) {
    std::vector<Rational> c(order + 1);
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
        c[k] = term;
        if (k == order) break;
        Rational nu = z_scale;
        for (const auto& x : num) nu *= x + k;
        Rational de = k + 1;
        for (const auto& x : den) de *= x + k;
        if (de == 0) {
            if (nu != 0) throw Error(ErrorCode::InadmissibleDenominator, "zero denominator in operator series");
            for (int m = k + 1; m <= order; ++m) c[m] = 0;
            break;
        }
        term *= nu / de;
    }
    return c;
}

Polynomial apply_symbol_to_power(const std::vector<Rational>& symbol, int n) {
    std::vector<Rational> c(n + 1);
    Rational fall = 1;
    for (int k = 0; k <= n && k < static_cast<int>(symbol.size()); ++k) {
        c[n - k] = symbol[k] * fall;
        fall *= n - k;
    }
    return Polynomial::from_monomial(c, n);
}

std::vector<Rational> additive_symbol(const HypergeometricSpec& s) {
    require_plain_argument(s, "additive_symbol");
    const int i = static_cast<int>(s.a.size()), j = static_cast<int>(s.b.size());
    const Rational z = (i + j + s.sign + 1) % 2 ? Rational(-1) : Rational(1);
    return hyper_series(reflected(s.b, s.n), reflected(s.a, s.n), z, s.n);
}

namespace {

std::vector<Rational> combined_symbol(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2) {
    auto sym = additive_symbol(s1);
    if (s2) {
        if (s2->n != s1.n) throw Error(ErrorCode::DegreeMismatch, "specs must share n");
        sym = truncated_product(sym, additive_symbol(*s2), s1.n);
    }
    return sym;
}

Polynomial second_or_unit(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2) {
    return s2 ? hyper_poly(*s2) : Polynomial::linear_power(s1.n, Rational(0));
}

}  // namespace

Polynomial additive_via_operators(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2) {
    return apply_symbol_to_power(combined_symbol(s1, s2), s1.n);
}

bool additive_hg_verify(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2) {
    if (s2 && s2->n != s1.n) throw Error(ErrorCode::DegreeMismatch, "specs must share n");
    const Polynomial direct = add_conv(hyper_poly(s1), second_or_unit(s1, s2), s1.n);
    const Polynomial via = additive_via_operators(s1, s2);
    if (direct.is_zero() || via.is_zero()) return direct.is_zero() && via.is_zero();
    return proportional(direct, via);
}

Polynomial symbol_product_polynomial(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2) {
    return Polynomial::from_monomial(combined_symbol(s1, s2), s1.n);
}

Polynomial reversed_product_representation(const HypergeometricSpec& s1,
                                           const std::optional<HypergeometricSpec>& s2) {
    const int n = s1.n;
    const Polynomial product = symbol_product_polynomial(s1, s2);
    if (product.degree() < n)
        throw Error(ErrorCode::DegreeDeficient, "operator product has degree " + std::to_string(product.degree()));
    const Polynomial f20 = hyper_poly_unchecked(n, {Rational(1)}, {}, Rational(1));
    return mult_conv(f20, add_conv(hyper_poly(s1), second_or_unit(s1, s2), n), n);
}

Polynomial kdf_poly(const KdFSpec& s, KdFMode mode) {
    check_kdf_admissible(s);
    const int n = s.n, r = s.r();
    const auto head = head_sequence(s);
    std::vector<Rational> c(n + 1);
    if (mode == KdFMode::AllScaled) {
        std::vector<Rational> conv{Rational(1)};
        for (int l = 0; l < r; ++l) conv = truncated_product(conv, kdf_weights(s.a[l], s.b[l], s.c[l], n), n);
        conv.resize(n + 1);
        for (int k = 0; k <= n; ++k) c[k] = head[k] * conv[k];
        return Polynomial::from_monomial(c, n);
    }
    if (r < 1) throw Error(ErrorCode::InvalidParameters, "one-variable mode needs r >= 1");
    const auto w1 = kdf_weights(s.a[0], s.b[0], s.c[0], n);
    std::vector<Rational> rest{Rational(1)};
    for (int l = 1; l < r; ++l) rest = truncated_product(rest, kdf_weights(s.a[l], s.b[l], s.c[l], n), n);
    rest.resize(n + 1);
    for (int l1 = 0; l1 <= n; ++l1) {
        Rational acc = 0;
        for (int m = 0; l1 + m <= n; ++m) acc += head[l1 + m] * rest[m];
        c[l1] = w1[l1] * acc;
    }
    return Polynomial::from_monomial(c, n);
}

Polynomial ConvExpr::evaluate() const {
    switch (kind) {
    case Kind::Leaf: {
        const Rational sgn = leaf.sign % 2 ? Rational(-1) : Rational(1);
        if (leaf.shift != 0) return hyper_poly(leaf);
        return hyper_poly_unchecked(leaf.n, leaf.a, leaf.b, sgn * leaf.scale);
    }
    case Kind::Reverse:
        return reverse(children.at(0).evaluate());
    case Kind::Mult:
    case Kind::Add: {
        Polynomial acc = children.at(0).evaluate();
        for (std::size_t i = 1; i < children.size(); ++i) {
            const Polynomial next = children[i].evaluate();
            acc = kind == Kind::Mult ? mult_conv(acc, next, acc.n()) : add_conv(acc, next, acc.n());
        }
        return acc;
    }
    }
    return Polynomial();
}

std::string ConvExpr::describe() const {
    switch (kind) {
    case Kind::Leaf:
        return finfree::describe(leaf);
    case Kind::Reverse:
        return "rev(" + children.at(0).describe() + ")";
    case Kind::Mult:
    case Kind::Add: {
        std::string out = "(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += kind == Kind::Mult ? " [x] " : " [+] ";
            out += children[i].describe();
        }
        return out + ")";
    }
    }
    return {};
}

KdFFactorization kdf_factorize(const KdFSpec& s, KdFMode mode) {
    check_kdf_admissible(s);
    for (const auto& c : s.c)
        if (c == 0) throw Error(ErrorCode::ZeroMultiplier, "KdF multiplier is zero");
    const int n = s.n, r = s.r();
    KdFFactorization out;
    if (mode == KdFMode::AllScaled) {
        std::vector<ConvExpr> sum;
        for (int l = 0; l < r; ++l) sum.push_back(leaf(reflected_leaf(n, s.a[l], s.b[l], Rational(1) / s.c[l])));
        ConvExpr q0 = leaf(reflected_leaf(n, s.a0, s.b0, Rational(1)));
        std::vector<ConvExpr> prod{q0};
        if (!sum.empty()) prod.push_back(sum.size() == 1 ? sum[0] : node(ConvExpr::Kind::Add, sum));
        ConvExpr inner = prod.size() == 1 ? prod[0] : node(ConvExpr::Kind::Mult, prod);
        out.tree = node(ConvExpr::Kind::Reverse, {inner});
    } else {
        if (r < 1) throw Error(ErrorCode::InvalidParameters, "one-variable mode needs r >= 1");
        HypergeometricSpec q0{n, s.a0, s.b0, Rational(1), Rational(0), 1};
        HypergeometricSpec q1{n, s.a[0], s.b[0], s.c[0], Rational(0), 1};
        std::vector<ConvExpr> sum{leaf(q0)};
        for (int l = 1; l < r; ++l) sum.push_back(leaf(reflected_leaf(n, s.a[l], s.b[l], Rational(1) / s.c[l])));
        ConvExpr add = sum.size() == 1 ? sum[0] : node(ConvExpr::Kind::Add, sum);
        out.tree = node(ConvExpr::Kind::Mult, {leaf(q1), add});
    }
    const auto lhs = kdf_poly(s, mode).monomial();
    const auto rhs = out.tree.evaluate().monomial();
    out.scalar = 0;
    for (int k = 0; k <= n; ++k) {
        if (rhs[k] != 0) {
            out.scalar = lhs[k] / rhs[k];
            break;
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> kdf_reciprocal_pair(const KdFSpec& s, bool literal_signs) {
    check_kdf_admissible(s);
    if (s.r() < 1) throw Error(ErrorCode::InvalidParameters, "reciprocal relation needs r >= 1");
    const std::size_t p0 = (s.a0.size() + s.b0.size()) % 2, p1 = (s.a[0].size() + s.b[0].size()) % 2;
    if (p0 != p1) throw Error(ErrorCode::InvalidParameters, "parity condition on tuple sizes fails");
    for (const auto& c : s.c)
        if (c == 0) throw Error(ErrorCode::ZeroMultiplier, "KdF multiplier is zero");
    const int n = s.n;
    const Rational sgn = p1 ? Rational(-1) : Rational(1);

    KdFSpec left = s;
    left.c[0] = sgn * s.c[0];
    const Polynomial lhs = reverse(kdf_poly(left, KdFMode::AllScaled));

    KdFSpec right = s;
    right.a0 = reflected(s.b[0], n);
    right.b0 = reflected(s.a[0], n);
    right.a[0] = reflected(s.b0, n);
    right.b[0] = reflected(s.a0, n);
    right.c[0] = sgn / s.c[0];
    for (int l = 1; l < s.r(); ++l) right.c[l] = (literal_signs ? s.c[l] : Rational(-s.c[l])) / s.c[0];
    return {lhs, kdf_poly(right, KdFMode::OneVariable)};
}

std::string describe(const HypergeometricSpec& s) {
    std::ostringstream os;
    os << "F(-" << s.n;
    if (!s.a.empty()) os << "," << tuple_string(s.a);
    os << ";" << tuple_string(s.b) << ";";
    if (s.sign % 2) os << "-";
    if (s.scale != 1) os << "(" << to_string(s.scale) << ")";
    os << "x";
    if (s.shift != 0) os << "+" << to_string(s.shift);
    os << ")";
    return os.str();
}

}  // namespace finfree
