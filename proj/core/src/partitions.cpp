#include "finfree/partitions.hpp"

#include "finfree/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace finfree {

namespace {

void guard_size(int k) {
    if (k < 0) throw Error(ErrorCode::InvalidParameters, "negative partition size");
    if (k > kMaxPartitionSize)
        throw Error(ErrorCode::TooLarge, "partition enumeration is limited to k <= " + std::to_string(kMaxPartitionSize));
}

// Restricted growth strings a_1..a_k with a_1 = 0 and a_i <= 1 + max(a_1..a_{i-1}).
void grow(int k, std::vector<int>& rgs, int i, int maxv, std::vector<SetPartition>& out) {
    if (i == k) {
        std::vector<std::vector<int>> blocks(maxv + 1);
        for (int e = 0; e < k; ++e) blocks[rgs[e]].push_back(e + 1);
        out.push_back(SetPartition{k, std::move(blocks)});
        return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
        rgs[i] = v;
        grow(k, rgs, i + 1, std::max(maxv, v), out);
    }
}

std::vector<int> block_labels(const SetPartition& p) {
    std::vector<int> label(p.k + 1, -1);
    for (int b = 0; b < p.size(); ++b)
        for (int e : p.blocks[b]) label[e] = b;
    return label;
}

Integer mobius_interval(const SetPartition& sigma, const SetPartition& pi) {
    // mu(s, s) = 1; mu(s, p) = -sum_{s <= rho < p} mu(s, rho)
    const auto& all = enumerate_partitions(sigma.k);
    std::vector<const SetPartition*> interval;
    for (const auto& rho : all)
        if (refines(sigma, rho) && refines(rho, pi)) interval.push_back(&rho);
    // Coarser partitions have fewer blocks, so sorting by decreasing block
    // count is a linear extension of the order.
    std::stable_sort(interval.begin(), interval.end(),
                     [](const SetPartition* a, const SetPartition* b) { return a->size() > b->size(); });
    std::vector<Integer> mu(interval.size());
    for (std::size_t i = 0; i < interval.size(); ++i) {
        if (*interval[i] == sigma) {
            mu[i] = 1;
            continue;
        }
        Integer s = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (refines(*interval[j], *interval[i]) && !(*interval[j] == *interval[i])) s += mu[j];
        mu[i] = -s;
    }
    for (std::size_t i = 0; i < interval.size(); ++i)
        if (*interval[i] == pi) return mu[i];
    return 0;
}

const Integer& mobius_bottom_top(int m) {
    static std::map<int, Integer> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, mobius_interval(finest(m), coarsest(m))).first;
    return it->second;
}

}  // namespace

SetPartition canonical(int k, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }), blocks.end());
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> seen(k + 1, 0);
    for (const auto& b : blocks)
        for (int e : b) {
            if (e < 1 || e > k || seen[e]++) throw Error(ErrorCode::InvalidParameters, "blocks do not partition {1..k}");
        }
    for (int e = 1; e <= k; ++e)
        if (!seen[e]) throw Error(ErrorCode::InvalidParameters, "blocks do not cover {1..k}");
    return SetPartition{k, std::move(blocks)};
}

SetPartition finest(int k) {
    std::vector<std::vector<int>> blocks;
    for (int e = 1; e <= k; ++e) blocks.push_back({e});
    return SetPartition{k, blocks};
}

SetPartition coarsest(int k) {
    std::vector<int> all;
    for (int e = 1; e <= k; ++e) all.push_back(e);
    if (k == 0) return SetPartition{0, {}};
    return SetPartition{k, {all}};
}

const std::vector<SetPartition>& enumerate_partitions(int k) {
    guard_size(k);
    static std::map<int, std::vector<SetPartition>> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<SetPartition> out;
    if (k == 0) {
        out.push_back(SetPartition{0, {}});
    } else {
        std::vector<int> rgs(k, 0);
        grow(k, rgs, 1, 0, out);
    }
    return cache.emplace(k, std::move(out)).first->second;
}

const std::vector<SetPartition>& enumerate_nc(int k) {
    guard_size(k);
    static std::map<int, std::vector<SetPartition>> cache;
    static std::mutex lock;
    const auto& all = enumerate_partitions(k);
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<SetPartition> out;
    for (const auto& p : all)
        if (is_noncrossing(p)) out.push_back(p);
    return cache.emplace(k, std::move(out)).first->second;
}

bool is_noncrossing(const SetPartition& p) {
    // No a < b < c < d with a, c in one block and b, d in another.
    const auto label = block_labels(p);
    for (int a = 1; a <= p.k; ++a)
        for (int b = a + 1; b <= p.k; ++b) {
            if (label[b] == label[a]) continue;
            for (int c = b + 1; c <= p.k; ++c) {
                if (label[c] != label[a]) continue;
                for (int d = c + 1; d <= p.k; ++d)
                    if (label[d] == label[b]) return false;
            }
        }
    return true;
}

bool refines(const SetPartition& sigma, const SetPartition& pi) {
    if (sigma.k != pi.k) return false;
    const auto label = block_labels(pi);
    for (const auto& b : sigma.blocks)
        for (int e : b)
            if (label[e] != label[b.front()]) return false;
    return true;
}

Integer mobius(const SetPartition& sigma, const SetPartition& pi) {
    if (!refines(sigma, pi)) throw Error(ErrorCode::NotComparable, "mobius needs sigma <= pi");
    guard_size(sigma.k);
    return mobius_interval(sigma, pi);
}

Integer mobius_from_bottom(const SetPartition& pi) {
    Integer mu = 1;
    for (const auto& b : pi.blocks) mu *= mobius_bottom_top(static_cast<int>(b.size()));
    return mu;
}

SetPartition kreweras(const SetPartition& pi) {
    // Points i' sit between i and i+1. i' and j' (i < j) share a block
    // exactly when {i+1..j} is a union of blocks of pi.
    const int k = pi.k;
    const auto label = block_labels(pi);
    std::vector<int> parent(k + 1);
    for (int i = 1; i <= k; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= k; ++i) {
        std::vector<int> inside(pi.size(), 0);
        for (int j = i + 1; j <= k; ++j) {
            ++inside[label[j]];
            bool closed = true;
            for (int b = 0; b < pi.size() && closed; ++b)
                if (inside[b] != 0 && inside[b] != static_cast<int>(pi.blocks[b].size())) closed = false;
            if (closed) parent[find(j)] = find(i);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 1; i <= k; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return canonical(k, std::move(blocks));
}

namespace {

// sum_{pi in P(j)} n^{|pi|} mu(0_j, pi) kappa_pi, excluding pi = 1_j when skip_top.
Rational cumulant_sum(int j, int n, const std::vector<Rational>& kappa, bool skip_top) {
    Rational s = 0;
    for (const auto& p : enumerate_partitions(j)) {
        if (skip_top && p.size() == 1) continue;
        Rational term = Rational(mobius_from_bottom(p)) * ipow(Rational(n), p.size());
        for (const auto& b : p.blocks) term *= kappa.at(b.size());
        s += term;
    }
    return s;
}

Rational cumulant_prefactor(int n, int j) {
    // (n)_j falling / (n^j j!)
    Rational f = 1;
    for (int i = 0; i < j; ++i) f *= n - i;
    return f / (ipow(Rational(n), j) * factorial(j));
}

}  // namespace

std::vector<Rational> finite_free_cumulants(const Polynomial& p, int count) {
    if (!p.is_exact()) throw Error(ErrorCode::FloatBackend, "finite_free_cumulants needs an exact polynomial");
    const int n = p.n();
    if (p.degree() != n) throw Error(ErrorCode::DegreeMismatch, "finite free cumulants need full degree n");
    if (count < 0) count = n;
    if (count > n) throw Error(ErrorCode::DegreeMismatch, "at most n finite free cumulants exist");
    const Polynomial m = p.monic();
    std::vector<Rational> kappa(count + 1);
    for (int j = 1; j <= count; ++j) {
        // e_j / prefactor = n mu(0_j,1_j) kappa_j + rest
        const Rational target = m.e(j) / cumulant_prefactor(n, j);
        const Rational rest = cumulant_sum(j, n, kappa, true);
        kappa[j] = (target - rest) / (Rational(n) * Rational(mobius_bottom_top(j)));
    }
    return kappa;
}

Polynomial polynomial_from_finite_cumulants(const std::vector<Rational>& kappa, int n) {
    if (static_cast<int>(kappa.size()) < n + 1)
        throw Error(ErrorCode::DegreeMismatch, "need kappa_1..kappa_n (index 0 unused)");
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (int j = 1; j <= n; ++j) e[j] = cumulant_prefactor(n, j) * cumulant_sum(j, n, kappa, false);
    return Polynomial(n, std::move(e));
}

}  // namespace finfree
