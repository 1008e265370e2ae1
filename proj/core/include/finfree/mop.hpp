#pragma once

/**
 * @file mop.hpp
 * @brief Multiple orthogonal polynomial families (Jacobi-Pineiro and the two
 *        multiple Laguerre kinds, Type I and Type II), their convolution
 *        representations, Gauss-rule orthogonality checks and zero theorems.
 *
 * Component indices i are 1-based. Type I constructors return the component
 * polynomial in hypergeometric normalization (constant term 1); Type II
 * constructors return monic polynomials.
 */

#include "finfree/asymptotics.hpp"
#include "finfree/poly_core.hpp"
#include "finfree/scalar.hpp"

#include <string>
#include <vector>

namespace finfree {

using MultiIndex = std::vector<int>;

int total(const MultiIndex& n);
// n + d e_i with i 1-based.
MultiIndex shifted(const MultiIndex& n, int i, int d = 1);

struct MopSpec {
    MopFamily family = MopFamily::JP2;
    std::vector<Rational> alpha;  // per weight (JP, ML1); ML2 uses alpha[0]
    Rational beta = 0;            // JP only
    std::vector<Rational> c;      // ML2 only

    int r() const;
};

// Throws InvalidParameters / DuplicateC when the family invariants fail for n.
void validate(const MopSpec& spec, const MultiIndex& n);

// ---------------------------------------------------------------------------
// Type I

Polynomial jp_typeI(const MopSpec& spec, const MultiIndex& n, int i);
// The normalizing constant in front of the hypergeometric form.
Real jp_typeI_constant(const MopSpec& spec, const MultiIndex& n, int i);
std::vector<Polynomial> jp_typeI_blocks(const MopSpec& spec, const MultiIndex& n, int i);
// Multiplicative convolution of the blocks at degree n_i - 1.
Polynomial jp_typeI_decomposition(const MopSpec& spec, const MultiIndex& n, int i);

Polynomial ml1_typeI(const MopSpec& spec, const MultiIndex& n, int i);
Real ml1_typeI_constant(const MopSpec& spec, const MultiIndex& n, int i);
std::vector<Polynomial> ml1_typeI_blocks(const MopSpec& spec, const MultiIndex& n, int i);
Polynomial ml1_typeI_decomposition(const MopSpec& spec, const MultiIndex& n, int i);
// v_i [x]_{n_i-1} P_{n,i} with v_i = 1F1(-n_i+1; alpha_i+beta+|n|; x), using spec.beta.
Polynomial ml1_typeI_bridge(const MopSpec& spec, const MultiIndex& n, int i);

std::vector<Polynomial> ml2_typeI_blocks(const MopSpec& spec, const MultiIndex& n, int i);
// Additive convolution of the blocks at degree n_i - 1.
Polynomial ml2_typeI(const MopSpec& spec, const MultiIndex& n, int i);

// ---------------------------------------------------------------------------
// Type II

enum class TypeIIPath {
    Direct,          // hypergeometric series (JP, ML1) or the explicit double sum (ML2)
    Decomposition,   // JP: product of 2F1 blocks, beta integer; ML2: q [x] (p_1 [+] ... [+] p_r)
    Reversed,        // JP, ML1: reciprocal representation built from 2F0 and reversed factors
    FactorizationBis // ML2: 1F1 [x] prod (x - 1/c_j)^{n_j}
};

Polynomial jp_typeII(const MopSpec& spec, const MultiIndex& n, TypeIIPath path = TypeIIPath::Direct);
// The r blocks whose product gives (1-x)^beta P up to scalar. The plain form
// carries the factor (alpha_j+1)_{n_j}/n_j! in front of the 2F1; the factored
// form is (1-x)^{|n|+beta-n_j} 2F1(-n_j, |n|+beta+alpha_j+1; alpha_j+1; x).
std::vector<Polynomial> jp_typeII_blocks(const MopSpec& spec, const MultiIndex& n, bool factored_form);
Polynomial ml1_typeII(const MopSpec& spec, const MultiIndex& n, TypeIIPath path = TypeIIPath::Direct);
Polynomial ml2_typeII(const MopSpec& spec, const MultiIndex& n, TypeIIPath path = TypeIIPath::Direct);

// Dispatch on spec.family; i is ignored for Type II.
Polynomial mop_polynomial(const MopSpec& spec, const MultiIndex& n, int i = 1);

// ---------------------------------------------------------------------------
// Gauss rules in working precision.

struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

// Weight x^a (1-x)^b on [0,1].
GaussRule gauss_jacobi01(const Rational& a, const Rational& b, int nodes, unsigned bits);
// Weight x^a e^{-c x} on [0, inf).
GaussRule gauss_laguerre(const Rational& a, const Rational& c, int nodes, unsigned bits);

Real evaluate_real(const Polynomial& p, const Real& x);

// The weight w_j (0-based j) of the family at x.
Real family_weight(const MopSpec& spec, int j, const Real& x);
GaussRule family_rule(const MopSpec& spec, int j, int nodes, unsigned bits);

struct OrthogonalityReport {
    int conditions = 0;
    int nodes = 0;
    Real max_residual = 0;       // relative to the sum of absolute quadrature terms
    Real normalization = 0;      // Type I: integral of x^{|n|-1} Q
    bool normalization_ok = true;
    std::vector<Real> scalars;   // Type I coefficients applied to each component
    bool passed(const Real& tol) const { return max_residual < tol && normalization_ok; }
};

OrthogonalityReport verify_orthogonality(const MopSpec& spec, const MultiIndex& n, unsigned bits = 256);

// Q_n(x) = sum_j s_j A_j(x) w_j(x) with the scalars of verify_orthogonality.
std::vector<Real> typeI_function_eval(const MopSpec& spec, const MultiIndex& n, const std::vector<Real>& xs,
                                      unsigned bits = 256);
int sign_changes(const std::vector<Real>& values);

// ---------------------------------------------------------------------------
// Zero theorems

struct TheoremVerdict {
    std::string claim;
    bool hypotheses = false;
    bool holds = false;
    bool informational = false;  // reported for comparison, not asserted
    std::string detail;
};

// Type I (JP, ML1): zero location in Delta_r, parameter monotonicity by the
// parity of r (as stated and reversed), and the derivative interlacing.
std::vector<TheoremVerdict> theorem_suite_zero_location(const MopSpec& spec, const MultiIndex& n, int i,
                                                        const Rational& t = 1, unsigned bits = 256);

// Type II (JP, ML1, ML2): index and parameter interlacing.
std::vector<TheoremVerdict> theorem_suite_interlacing(const MopSpec& spec, const MultiIndex& n, int i,
                                                      const Rational& t = 1, unsigned bits = 256);

// Sorted real zeros at the given precision; throws NonRealRoots if any zero
// has imaginary part above tau (1 + |z|).
std::vector<Real> sorted_real_zeros(const Polynomial& p, unsigned bits, const Real& tau);

}  // namespace finfree
