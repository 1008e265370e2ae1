#pragma once

/**
 * @file partitions.hpp
 * @brief Set partitions, non-crossing partitions and cumulants.
 */

#include "finfree/poly_core.hpp"

#include <vector>

namespace finfree {

// Blocks hold 1-based elements in increasing order; blocks are ordered by
// their smallest element.
struct SetPartition {
    int k = 0;
    std::vector<std::vector<int>> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    bool operator==(const SetPartition& o) const { return k == o.k && blocks == o.blocks; }
};

constexpr int kMaxPartitionSize = 12;

SetPartition canonical(int k, std::vector<std::vector<int>> blocks);
SetPartition finest(int k);
SetPartition coarsest(int k);

const std::vector<SetPartition>& enumerate_partitions(int k);
const std::vector<SetPartition>& enumerate_nc(int k);

bool is_noncrossing(const SetPartition& p);
// sigma <= pi: every block of sigma lies inside a block of pi.
bool refines(const SetPartition& sigma, const SetPartition& pi);

// Recursive inversion of the zeta function on the interval [sigma, pi].
Integer mobius(const SetPartition& sigma, const SetPartition& pi);
// mu(0_k, pi), using the product structure of lower intervals with
// mu(0_m, 1_m) obtained by recursive inversion.
Integer mobius_from_bottom(const SetPartition& pi);

SetPartition kreweras(const SetPartition& pi);

// Finite free cumulants kappa_1..kappa_count of the root distribution of p.
std::vector<Rational> finite_free_cumulants(const Polynomial& p, int count = -1);
// Inverse: the monic polynomial of degree n with the given cumulants (count == n).
Polynomial polynomial_from_finite_cumulants(const std::vector<Rational>& kappa, int n);

// m_k = sum over NC(k) of prod over blocks r_|B|; index 0 of the result is m_0 = 1,
// index 0 of r is ignored (r[j] is the j-th cumulant).
template <class T>
std::vector<T> moments_from_cumulants_nc(const std::vector<T>& r, int order);
template <class T>
std::vector<T> cumulants_from_moments_nc(const std::vector<T>& m, int order);
// r_j(theta) = sum_{pi in NC(j)} r_pi(alpha) r_{K(pi)}(beta)
template <class T>
std::vector<T> multiplicative_cumulant_product(const std::vector<T>& ra, const std::vector<T>& rb, int order);

template <class T>
T partition_product(const SetPartition& p, const std::vector<T>& r) {
    T acc(1);
    for (const auto& b : p.blocks) acc *= r.at(b.size());
    return acc;
}

template <class T>
std::vector<T> moments_from_cumulants_nc(const std::vector<T>& r, int order) {
    std::vector<T> m(order + 1, T(0));
    m[0] = T(1);
    for (int k = 1; k <= order; ++k)
        for (const auto& p : enumerate_nc(k)) m[k] += partition_product(p, r);
    return m;
}

template <class T>
std::vector<T> cumulants_from_moments_nc(const std::vector<T>& m, int order) {
    std::vector<T> r(order + 1, T(0));
    for (int k = 1; k <= order; ++k) {
        T rest(0);
        for (const auto& p : enumerate_nc(k))
            if (p.size() > 1) rest += partition_product(p, r);
        r[k] = m.at(k) - rest;
    }
    return r;
}

template <class T>
std::vector<T> multiplicative_cumulant_product(const std::vector<T>& ra, const std::vector<T>& rb, int order) {
    std::vector<T> out(order + 1, T(0));
    for (int j = 1; j <= order; ++j)
        for (const auto& p : enumerate_nc(j)) out[j] += partition_product(p, ra) * partition_product(kreweras(p), rb);
    return out;
}

}  // namespace finfree
