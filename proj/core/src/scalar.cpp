#include "finfree/scalar.hpp"

#include "finfree/error.hpp"

#include <cmath>
#include <sstream>

namespace finfree {

namespace {

thread_local unsigned current_bits = 256;

unsigned digits10_for_bits(unsigned bits) {
    unsigned d = 1;
    while (boost::multiprecision::detail::digits10_2_2(d) < bits) ++d;
    return d;
}

const bool initialized = [] {
    Real::default_precision(digits10_for_bits(current_bits));
    return true;
}();

}  // namespace

unsigned precision_bits() { return current_bits; }

void set_precision_bits(unsigned bits) {
    if (bits < 64) bits = 64;
    current_bits = bits;
    Real::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(current_bits) { set_precision_bits(bits); }

PrecisionGuard::~PrecisionGuard() { set_precision_bits(saved_); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    auto digits_only = [&](std::string part) {
        bool minus = false;
        if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
            minus = part[0] == '-';
            part.erase(0, 1);
        }
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
        const auto nz = part.find_first_not_of('0');
        part = nz == std::string::npos ? "0" : part.substr(nz);
        Integer v(part);
        return minus ? Integer(-v) : v;
    };
    try {
        if (s.find_first_of(".eE") == std::string::npos) {
            const auto slash = s.find('/');
            if (slash == std::string::npos) return Rational(digits_only(s));
            const Integer num = digits_only(s.substr(0, slash));
            const Integer den = digits_only(s.substr(slash + 1));
            if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        bool neg = false;
        std::size_t pos = 0;
        if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
        std::string mant;
        long exp10 = 0;
        auto epos = s.find_first_of("eE", pos);
        std::string body = s.substr(pos, epos == std::string::npos ? std::string::npos : epos - pos);
        if (epos != std::string::npos) exp10 = std::stol(s.substr(epos + 1));
        auto dot = body.find('.');
        if (dot != std::string::npos) {
            exp10 -= static_cast<long>(body.size() - dot - 1);
            body.erase(dot, 1);
        }
        const Integer num = digits_only(body);
        Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exp10)));
        Rational q = exp10 >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
        return neg ? Rational(-q) : q;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    }
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string s(text);
    if (s.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::string to_string(const Rational& q) { return q.str(); }

Real to_real(const Rational& q) {
    Real x;
    mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
    return x;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Real& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

Rational ipow(const Rational& x, int k) {
    Rational base = k < 0 ? Rational(1 / x) : x;
    Rational r = 1;
    for (unsigned e = static_cast<unsigned>(std::abs(k)); e; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

Rational factorial(unsigned k) {
    Integer f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Integer b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return Rational(b);
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return Complex(Real(-a.re), Real(-a.im)); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Complex conj(const Complex& z) { return Complex(z.re, Real(-z.im)); }

Complex polar(const Real& r, const Real& theta) {
    return Complex(Real(r * boost::multiprecision::cos(theta)), Real(r * boost::multiprecision::sin(theta)));
}

}  // namespace finfree
