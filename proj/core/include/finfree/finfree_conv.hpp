#pragma once

#include "finfree/poly_core.hpp"

namespace finfree {

// e_k(p [x]_n q) = C(n,k)^-1 e_k(p) e_k(q)
Polynomial mult_conv(const Polynomial& p, const Polynomial& q, int n);

// e_k(p [+]_n q) = (n)_k sum_{i+j=k} e_i(p)/(n)_i * e_j(q)/(n)_j, falling factorials.
// Returns the zero polynomial of ambient degree n when deg p + deg q < n.
Polynomial add_conv(const Polynomial& p, const Polynomial& q, int n);

// (Dil_a p) [x]_n q == p [x]_n (Dil_a q) == Dil_a(p [x]_n q), exactly.
bool check_identity_dilation_distribute(const Polynomial& p, const Polynomial& q, int n, const Rational& alpha);

// (Dil_a p) [+]_n (Dil_a q) ~ Dil_a(p [+]_n q), up to a nonzero scalar.
bool check_identity_dilation_additive(const Polynomial& p, const Polynomial& q, int n, const Rational& alpha);

}  // namespace finfree
