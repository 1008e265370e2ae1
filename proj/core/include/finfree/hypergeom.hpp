#pragma once

/**
 * @file hypergeom.hpp
 * @brief Terminating hypergeometric and Kampe de Feriet polynomials.
 *
 * F(-n, a; b; x) = sum_k (-n)_k (a)_k / (b)_k x^k / k!
 * The tuple a never contains the leading -n.
 */

#include "finfree/poly_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finfree {

Rational rising(const Rational& a, unsigned k);
Rational falling(const Rational& a, unsigned k);

struct HypergeometricSpec {
    int n = 0;
    std::vector<Rational> a;
    std::vector<Rational> b;
    Rational scale = 1;  // argument c in (-1)^sign (c x + d)
    Rational shift = 0;  // argument d
    int sign = 0;
};

// No b in {0, -1, ..., -n}.
bool admissible(const HypergeometricSpec& s);
// No a in {0, -1, ..., -(n-1)}.
bool full_degree(const HypergeometricSpec& s);

// Hypergeometric normalization: constant term 1 at x = 0 when scale = 1, shift = 0.
Polynomial hyper_poly(const HypergeometricSpec& s);

// Same expansion without the admissibility guard; fails only on a zero
// denominator that is actually reached.
Polynomial hyper_poly_unchecked(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                const Rational& z_scale);

HypergeometricSpec hyper_derivative(const HypergeometricSpec& s);
HypergeometricSpec hyper_mult_conv(const HypergeometricSpec& s1, const HypergeometricSpec& s2);

// Coefficients of sum_k (num)_k/(den)_k z^k/k! for k = 0..order.
std::vector<Rational> hyper_series(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                   const Rational& z_scale, int order);

// q(d/dx) applied to x^n, where q has monomial coefficients symbol[k].
Polynomial apply_symbol_to_power(const std::vector<Rational>& symbol, int n);

// The differential-operator symbol attached to F(-n, a; b; (-1)^l x):
// F(-b-n+1; -a-n+1; (-1)^(|a|+|b|+l+1) z), truncated at order n.
std::vector<Rational> additive_symbol(const HypergeometricSpec& s);

// p [+]_n q computed through the operator product acting on x^n.
// A missing second spec stands for the unit x^n.
Polynomial additive_via_operators(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2);
bool additive_hg_verify(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2);

// Truncated product of the two operator symbols, read as a polynomial in x.
Polynomial symbol_product_polynomial(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2);
// 2F0(-n,1;;x) [x]_n (p1 [+]_n p2), which is proportional to the reverse of
// symbol_product_polynomial.
Polynomial reversed_product_representation(const HypergeometricSpec& s1, const std::optional<HypergeometricSpec>& s2);

struct KdFSpec {
    int n = 0;
    std::vector<Rational> a0;
    std::vector<Rational> b0;
    std::vector<std::vector<Rational>> a;  // r tuples
    std::vector<std::vector<Rational>> b;  // r tuples
    std::vector<Rational> c;               // r multipliers

    int r() const { return static_cast<int>(c.size()); }
};

enum class KdFMode {
    AllScaled,    // arguments (c_1 x, ..., c_r x)
    OneVariable,  // arguments (c_1 x, c_2, ..., c_r)
};

Polynomial kdf_poly(const KdFSpec& s, KdFMode mode);

struct ConvExpr {
    enum class Kind { Leaf, Mult, Add, Reverse };
    Kind kind = Kind::Leaf;
    HypergeometricSpec leaf;
    std::vector<ConvExpr> children;

    Polynomial evaluate() const;
    std::string describe() const;
};

struct KdFFactorization {
    ConvExpr tree;
    Rational scalar;  // kdf_poly == scalar * tree.evaluate()
};

KdFFactorization kdf_factorize(const KdFSpec& s, KdFMode mode);

// Reciprocal relation between two KdF polynomials (r >= 1), requiring
// (-1)^(|a0|+|b0|) == (-1)^(|a1|+|b1|). Returns the pair (left, right) that
// should be proportional. With literal_signs the remaining arguments are
// c_l / c_1; otherwise -c_l / c_1.
std::pair<Polynomial, Polynomial> kdf_reciprocal_pair(const KdFSpec& s, bool literal_signs);

std::string describe(const HypergeometricSpec& s);

}  // namespace finfree
