#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rationals (GMP) and variable-precision binary floats (MPFR).
 *
 * Float precision is a per-thread working value in bits. Every Real created
 * while a PrecisionGuard is alive carries at least that many bits.
 */

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace finfree {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

unsigned precision_bits();
void set_precision_bits(unsigned bits);

class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Accepts "p/q", integers and plain decimals such as "0.45" or "-1e-3".
Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);
std::string to_string(const Rational& q);

Real to_real(const Rational& q);
double to_double(const Rational& q);
std::string to_string(const Real& x, int digits);

Rational ipow(const Rational& x, int k);
Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Complex conj(const Complex& z);
Complex polar(const Real& r, const Real& theta);

}  // namespace finfree
