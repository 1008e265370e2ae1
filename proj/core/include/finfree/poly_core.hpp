#pragma once

/**
 * @file poly_core.hpp
 * @brief Polynomials in the signed elementary-symmetric convention.
 *
 * A Polynomial of ambient degree n stores e_0..e_n with
 *   p(x) = sum_j x^(n-j) (-1)^j e_j.
 * The ambient degree is kept even when leading coefficients vanish.
 */

#include "finfree/scalar.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace finfree {

enum class Backend { Exact, Float };

class Polynomial {
public:
    Polynomial();
    Polynomial(int n, std::vector<Rational> e);

    static Polynomial zero(int n);
    static Polynomial from_float(std::vector<Real> e, unsigned bits);
    // c[k] is the coefficient of x^k; the ambient degree defaults to c.size()-1.
    static Polynomial from_monomial(const std::vector<Rational>& c, int n = -1);
    static Polynomial from_roots(const std::vector<Rational>& roots);
    // (x - alpha)^n
    static Polynomial linear_power(int n, const Rational& alpha);

    int n() const { return n_; }
    Backend backend() const { return backend_; }
    bool is_exact() const { return backend_ == Backend::Exact; }
    unsigned precision_bits() const { return bits_; }

    const std::vector<Rational>& e() const;
    const Rational& e(int j) const { return e().at(j); }
    const std::vector<Real>& e_float() const;

    std::vector<Rational> monomial() const;
    std::vector<Real> monomial_float() const;

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    Rational leading() const;

    Polynomial to_float(unsigned bits) const;
    Polynomial scaled(const Rational& s) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    Polynomial with_ambient(int m) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    int n_ = 0;
    Backend backend_ = Backend::Exact;
    unsigned bits_ = 0;
    std::vector<Rational> e_;
    std::vector<Real> f_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& s, const Polynomial& p);
// Ordinary product; ambient degrees add.
Polynomial multiply(const Polynomial& p, const Polynomial& q);

// alpha^n p(x/alpha), i.e. e_j -> alpha^j e_j.
Polynomial dilate(const Polynomial& p, const Rational& alpha);
// p(x - alpha).
Polynomial shift(const Polynomial& p, const Rational& alpha);
// x^n p(1/x) with respect to the ambient degree.
Polynomial reverse(const Polynomial& p);

Rational evaluate(const Polynomial& p, const Rational& x);
// Horner in working precision. For float inputs the rounding error is
// bounded by 2n u sum_k |c_k| |x|^k with u = 2^-precision.
Complex evaluate(const Polynomial& p, const Complex& x);

// True iff p = lambda q for some nonzero lambda, comparing monomial
// coefficients. The factor is written to lambda when requested.
bool proportional(const Polynomial& p, const Polynomial& q, Rational* lambda = nullptr);

std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

}  // namespace finfree
