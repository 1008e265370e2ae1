#include "finfree/poly_core.hpp"

#include "finfree/error.hpp"

#include <json.hpp>

#include <sstream>

namespace finfree {

namespace {

void require_exact(const Polynomial& p, const char* op) {
    if (!p.is_exact()) throw Error(ErrorCode::FloatBackend, std::string(op) + " needs an exact polynomial");
}

void require_same_n(const Polynomial& p, const Polynomial& q, const char* op) {
    if (p.n() != q.n())
        throw Error(ErrorCode::DegreeMismatch,
                    std::string(op) + ": ambient degrees " + std::to_string(p.n()) + " and " + std::to_string(q.n()));
}

template <class T>
std::vector<T> e_to_monomial(const std::vector<T>& e) {
    const int n = static_cast<int>(e.size()) - 1;
    std::vector<T> c(e.size());
    for (int k = 0; k <= n; ++k) {
        const int j = n - k;
        c[k] = (j % 2 == 0) ? T(e[j]) : T(-e[j]);
    }
    return c;
}

template <class T>
std::vector<T> monomial_to_e(const std::vector<T>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<T> e(c.size());
    for (int j = 0; j <= n; ++j) e[j] = (j % 2 == 0) ? T(c[n - j]) : T(-c[n - j]);
    return e;
}

template <class T>
std::vector<T> taylor_shift(std::vector<T> c, const T& alpha) {
    // p(x - alpha) by repeated synthetic division.
    const int n = static_cast<int>(c.size()) - 1;
    const T minus_alpha = -alpha;
    for (int i = 0; i < n; ++i)
        for (int k = n - 1; k >= i; --k) c[k] += minus_alpha * c[k + 1];
    return c;
}

}  // namespace

Polynomial::Polynomial() : n_(0), e_{Rational(0)} {}

Polynomial::Polynomial(int n, std::vector<Rational> e) : n_(n), e_(std::move(e)) {
    if (n < 0 || static_cast<int>(e_.size()) != n + 1)
        throw Error(ErrorCode::DegreeMismatch, "coefficient vector must have n+1 entries");
}

Polynomial Polynomial::zero(int n) { return Polynomial(n, std::vector<Rational>(n + 1)); }

Polynomial Polynomial::from_float(std::vector<Real> e, unsigned bits) {
    if (e.empty()) throw Error(ErrorCode::DegreeMismatch, "empty coefficient vector");
    if (bits < 64) throw Error(ErrorCode::InvalidParameters, "float backend needs at least 64 bits");
    Polynomial p;
    p.n_ = static_cast<int>(e.size()) - 1;
    p.backend_ = Backend::Float;
    p.bits_ = bits;
    p.e_.clear();
    p.f_ = std::move(e);
    return p;
}

Polynomial Polynomial::from_monomial(const std::vector<Rational>& c, int n) {
    int deg = static_cast<int>(c.size()) - 1;
    while (deg >= 0 && c[deg] == 0) --deg;
    if (n < 0) n = std::max(0, static_cast<int>(c.size()) - 1);
    if (deg > n) throw Error(ErrorCode::DegreeMismatch, "ambient degree below actual degree");
    std::vector<Rational> full(n + 1);
    for (int k = 0; k <= deg; ++k) full[k] = c[k];
    return Polynomial(n, monomial_to_e(full));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return from_monomial(c);
}

Polynomial Polynomial::linear_power(int n, const Rational& alpha) {
    std::vector<Rational> e(n + 1);
    Rational a = 1;
    for (int j = 0; j <= n; ++j) {
        e[j] = binomial(n, j) * a;
        a *= alpha;
    }
    return Polynomial(n, std::move(e));
}

const std::vector<Rational>& Polynomial::e() const {
    require_exact(*this, "exact coefficient access");
    return e_;
}

const std::vector<Real>& Polynomial::e_float() const {
    if (is_exact()) throw Error(ErrorCode::InvalidParameters, "polynomial is exact; call to_float first");
    return f_;
}

std::vector<Rational> Polynomial::monomial() const { return e_to_monomial(e()); }

std::vector<Real> Polynomial::monomial_float() const {
    if (is_exact()) {
        std::vector<Real> c;
        c.reserve(n_ + 1);
        for (const auto& q : monomial()) c.push_back(to_real(q));
        return c;
    }
    return e_to_monomial(f_);
}

int Polynomial::degree() const {
    for (int j = 0; j <= n_; ++j) {
        const bool nz = is_exact() ? e_[j] != 0 : f_[j] != 0;
        if (nz) return n_ - j;
    }
    return -1;
}

Rational Polynomial::leading() const {
    const int d = degree();
    if (d < 0) return Rational(0);
    return monomial()[d];
}

Polynomial Polynomial::to_float(unsigned bits) const {
    if (!is_exact()) {
        PrecisionGuard guard(bits);
        std::vector<Real> f;
        for (const auto& x : f_) f.emplace_back(x);
        return from_float(std::move(f), bits);
    }
    PrecisionGuard guard(bits);
    std::vector<Real> f;
    f.reserve(n_ + 1);
    for (const auto& q : e_) f.push_back(to_real(q));
    return from_float(std::move(f), bits);
}

Polynomial Polynomial::scaled(const Rational& s) const {
    require_exact(*this, "scaled");
    std::vector<Rational> e = e_;
    for (auto& x : e) x *= s;
    return Polynomial(n_, std::move(e));
}

Polynomial Polynomial::monic() const {
    const Rational lead = leading();
    if (lead == 0) return *this;
    return scaled(Rational(1) / lead);
}

Polynomial Polynomial::derivative() const {
    require_exact(*this, "derivative");
    if (n_ == 0) throw Error(ErrorCode::ZeroDegree, "derivative of ambient degree 0");
    auto c = monomial();
    std::vector<Rational> d(n_);
    for (int k = 1; k <= n_; ++k) d[k - 1] = c[k] * k;
    return from_monomial(d, n_ - 1);
}

Polynomial Polynomial::with_ambient(int m) const {
    require_exact(*this, "with_ambient");
    if (degree() > m) throw Error(ErrorCode::DegreeMismatch, "ambient degree below actual degree");
    auto c = monomial();
    c.resize(std::max<std::size_t>(c.size(), m + 1));
    c.resize(m + 1);
    return from_monomial(c, m);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (n_ != o.n_ || backend_ != o.backend_) return false;
    return is_exact() ? e_ == o.e_ : f_ == o.f_;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_same_n(p, q, "sum");
    std::vector<Rational> e = p.e();
    for (int j = 0; j <= p.n(); ++j) e[j] += q.e(j);
    return Polynomial(p.n(), std::move(e));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + q.scaled(Rational(-1)); }

Polynomial operator*(const Rational& s, const Polynomial& p) { return p.scaled(s); }

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    auto a = p.monomial();
    auto b = q.monomial();
    std::vector<Rational> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return Polynomial::from_monomial(c, p.n() + q.n());
}

Polynomial dilate(const Polynomial& p, const Rational& alpha) {
    if (alpha == 0) throw Error(ErrorCode::ZeroDilation, "dilation by zero");
    if (p.is_exact()) {
        std::vector<Rational> e = p.e();
        Rational a = 1;
        for (auto& x : e) {
            x *= a;
            a *= alpha;
        }
        return Polynomial(p.n(), std::move(e));
    }
    PrecisionGuard guard(p.precision_bits());
    std::vector<Real> e = p.e_float();
    const Real ra = to_real(alpha);
    Real a = 1;
    for (auto& x : e) {
        x *= a;
        a *= ra;
    }
    return Polynomial::from_float(std::move(e), p.precision_bits());
}

Polynomial shift(const Polynomial& p, const Rational& alpha) {
    if (p.is_exact()) return Polynomial::from_monomial(taylor_shift(p.monomial(), alpha), p.n());
    PrecisionGuard guard(p.precision_bits());
    auto c = taylor_shift(p.monomial_float(), to_real(alpha));
    return Polynomial::from_float(monomial_to_e(c), p.precision_bits());
}

Polynomial reverse(const Polynomial& p) {
    // e_j(p*) = (-1)^n e_{n-j}(p)
    const int n = p.n();
    const bool flip = n % 2 == 1;
    if (p.is_exact()) {
        std::vector<Rational> e(n + 1);
        for (int j = 0; j <= n; ++j) e[j] = flip ? Rational(-p.e(n - j)) : p.e(n - j);
        return Polynomial(n, std::move(e));
    }
    PrecisionGuard guard(p.precision_bits());
    std::vector<Real> e(n + 1);
    for (int j = 0; j <= n; ++j) e[j] = flip ? Real(-p.e_float()[n - j]) : p.e_float()[n - j];
    return Polynomial::from_float(std::move(e), p.precision_bits());
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    auto c = p.monomial();
    Rational acc = 0;
    for (int k = p.n(); k >= 0; --k) acc = acc * x + c[k];
    return acc;
}

Complex evaluate(const Polynomial& p, const Complex& x) {
    auto c = p.monomial_float();
    Complex acc;
    for (int k = p.n(); k >= 0; --k) {
        acc *= x;
        acc.re += c[k];
    }
    return acc;
}

bool proportional(const Polynomial& p, const Polynomial& q, Rational* lambda) {
    auto a = p.monomial();
    auto b = q.monomial();
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len);
    b.resize(len);
    Rational ratio = 0;
    bool found = false;
    for (std::size_t k = 0; k < len; ++k) {
        if ((a[k] == 0) != (b[k] == 0)) return false;
        if (a[k] == 0) continue;
        if (!found) {
            ratio = a[k] / b[k];
            found = true;
        } else if (a[k] != ratio * b[k]) {
            return false;
        }
    }
    if (!found) return false;
    if (lambda) *lambda = ratio;
    return true;
}

std::string to_string(const Polynomial& p) {
    std::ostringstream os;
    os << "n=" << p.n() << " e=[";
    for (int j = 0; j <= p.n(); ++j) {
        if (j) os << ", ";
        if (p.is_exact())
            os << to_string(p.e(j));
        else
            os << to_string(p.e_float()[j], 20);
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

std::string to_json(const Polynomial& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n();
    auto arr = nlohmann::ordered_json::array();
    if (p.is_exact()) {
        for (const auto& x : p.e()) arr.push_back(to_string(x));
    } else {
        const int digits = static_cast<int>(p.precision_bits() * 0.30103) + 2;
        for (const auto& x : p.e_float()) arr.push_back(to_string(x, digits));
        j["precision_bits"] = p.precision_bits();
    }
    j["e"] = std::move(arr);
    return j.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
    if (!j.contains("n") || !j.contains("e") || !j["e"].is_array())
        throw Error(ErrorCode::ParseError, "polynomial JSON needs fields n and e");
    const int n = j["n"].get<int>();
    const auto& arr = j["e"];
    if (static_cast<int>(arr.size()) != n + 1) throw Error(ErrorCode::ParseError, "e must have n+1 entries");
    if (j.contains("precision_bits")) {
        const unsigned bits = j["precision_bits"].get<unsigned>();
        PrecisionGuard guard(bits);
        std::vector<Real> f;
        for (const auto& s : arr) f.emplace_back(s.get<std::string>());
        return Polynomial::from_float(std::move(f), bits);
    }
    std::vector<Rational> e;
    for (const auto& s : arr) {
        if (!s.is_string()) throw Error(ErrorCode::ParseError, "coefficients must be strings");
        e.push_back(parse_rational(s.get<std::string>()));
    }
    return Polynomial(n, std::move(e));
}

}  // namespace finfree
