#pragma once

// Independent reference computations used only by tests.

#include "finfree/poly_core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using finfree::Polynomial;
using finfree::Rational;

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

// Rational strictly inside (lo, hi) with a non-integer value.
inline Rational random_noninteger(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> den(2, 7);
    for (;;) {
        const int d = den(rng);
        std::uniform_int_distribution<int> num(lo * d + 1, hi * d - 1);
        Rational q(num(rng), d);
        if (boost::multiprecision::denominator(q) != 1) return q;
    }
}

inline std::vector<Rational> random_roots(std::mt19937_64& rng, int n) {
    std::vector<Rational> r(n);
    for (auto& x : r) x = random_rational(rng);
    return r;
}

inline Polynomial random_poly(std::mt19937_64& rng, int n) {
    std::vector<Rational> e(n + 1);
    for (auto& x : e) x = random_rational(rng);
    if (e[0] == 0) e[0] = 1;
    return Polynomial(n, e);
}

// Monomial coefficients of prod (x - r_i).
inline std::vector<Rational> expand_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = next;
    }
    return c;
}

// Average over all permutations s of prod (x - combine(a_i, b_s(i))).
template <class Combine>
std::vector<Rational> permutation_average(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                          Combine combine) {
    const std::size_t n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Rational> acc(n + 1);
    long count = 0;
    do {
        std::vector<Rational> roots(n);
        for (std::size_t i = 0; i < n; ++i) roots[i] = combine(a[i], b[perm[i]]);
        auto c = expand_roots(roots);
        for (std::size_t k = 0; k <= n; ++k) acc[k] += c[k];
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& x : acc) x /= count;
    return acc;
}

inline std::vector<Rational> additive_by_permutations(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return permutation_average(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

inline std::vector<Rational> multiplicative_by_permutations(const std::vector<Rational>& a,
                                                            const std::vector<Rational>& b) {
    return permutation_average(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

// Term-by-term sum of F(-n, a; b; z x) with Pochhammer products recomputed per term.
inline std::vector<Rational> hypergeometric_terms(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                  const Rational& z) {
    auto poch = [](const Rational& x, int k) {
        Rational r = 1;
        for (int i = 0; i < k; ++i) r *= x + i;
        return r;
    };
    std::vector<Rational> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational num = poch(Rational(-n), k);
        for (const auto& x : a) num *= poch(x, k);
        Rational den = 1;
        for (int i = 2; i <= k; ++i) den *= i;
        for (const auto& x : b) den *= poch(x, k);
        Rational zk = 1;
        for (int i = 0; i < k; ++i) zk *= z;
        c[k] = num / den * zk;
    }
    return c;
}

// Newton's identities: power sums p_k from monic monomial coefficients.
inline std::vector<Rational> power_sums_from_e(const std::vector<Rational>& e, int kmax) {
    // e[0] == 1 assumed; p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    const int n = static_cast<int>(e.size()) - 1;
    std::vector<Rational> p(kmax + 1);
    p[0] = n;
    for (int k = 1; k <= kmax; ++k) {
        Rational s = 0;
        for (int i = 1; i < k && i <= n; ++i) s += ((i - 1) % 2 ? -1 : 1) * e[i] * p[k - i];
        if (k <= n) s += ((k - 1) % 2 ? -1 : 1) * Rational(k) * e[k];
        p[k] = s;
    }
    return p;
}

}  // namespace oracle
