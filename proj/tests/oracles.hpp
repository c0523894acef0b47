#pragma once

// Brute-force reference implementations used only by tests. Each takes the
// slowest honest path and shares no algebra or data structures with the
// library code it cross-checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "partitioned_graph.hpp"

namespace oracle {

// advances idx to the next s-subset of [0, n) in lexicographic order
inline bool next_subset(std::vector<uint64_t>& idx, uint64_t n) {
    const uint64_t k = idx.size();
    for (uint64_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (uint64_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// K_{s,t} presence by explicit enumeration through has_edge: every s-subset,
// then a per-vertex scan for common neighbours
inline bool has_kst(const x3p::PartitionedGraph& g, uint64_t s, uint64_t t) {
    const uint64_t n = g.vertex_count();
    if (s == 0 || s > n) return false;
    std::vector<uint64_t> idx(s);
    for (uint64_t i = 0; i < s; ++i) idx[i] = i;
    do {
        uint64_t common = 0;
        for (uint64_t v = 0; v < n; ++v) {
            bool member = false;
            for (uint64_t u : idx) member = member || u == v;
            if (member) continue;
            bool all = true;
            for (uint64_t u : idx)
                if (!g.has_edge(u, v)) {
                    all = false;
                    break;
                }
            if (all) ++common;
        }
        if (common >= t) return true;
    } while (next_subset(idx, n));
    return false;
}

// doubly nested variant for tiny graphs: enumerates both sides and checks
// every cross edge
inline bool has_kst_tiny(const x3p::PartitionedGraph& g, uint64_t s, uint64_t t) {
    const uint64_t n = g.vertex_count();
    if (s == 0 || t == 0 || s + t > n) return false;
    std::vector<uint64_t> si(s);
    for (uint64_t i = 0; i < s; ++i) si[i] = i;
    do {
        std::vector<uint64_t> rest;
        for (uint64_t v = 0; v < n; ++v) {
            bool member = false;
            for (uint64_t u : si) member = member || u == v;
            if (!member) rest.push_back(v);
        }
        if (rest.size() < t) continue;
        std::vector<uint64_t> ti(t);
        for (uint64_t i = 0; i < t; ++i) ti[i] = i;
        do {
            bool complete = true;
            for (uint64_t u : si) {
                for (uint64_t j : ti)
                    if (!g.has_edge(u, rest[j])) {
                        complete = false;
                        break;
                    }
                if (!complete) break;
            }
            if (complete) return true;
        } while (next_subset(ti, rest.size()));
    } while (next_subset(si, n));
    return false;
}

// schoolbook polynomial product reduced by long division against a monic
// modulus; coefficient vectors are constant-first with length deg(modulus)
inline std::vector<uint64_t> field_mul(uint64_t p, const std::vector<uint64_t>& modulus,
                                       const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
    const uint64_t e = modulus.size() - 1;
    std::vector<uint64_t> prod(2 * e - 1, 0);
    for (uint64_t i = 0; i < e; ++i)
        for (uint64_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (uint64_t d = 2 * e - 2; d + 1 > e; --d) {
        const uint64_t c = prod[d];
        prod[d] = 0;
        for (uint64_t i = 0; i < e; ++i)
            prod[d - e + i] = (prod[d - e + i] + c * (p - modulus[i] % p)) % p;
    }
    prod.resize(e);
    return prod;
}

inline uint64_t small_binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// minimum of sum C(d_i, s) over every composition of e into m parts
inline uint64_t minbinom_exhaustive(uint64_t m, uint64_t e, uint64_t s) {
    if (m == 0) return e == 0 ? 0 : UINT64_MAX;
    if (m == 1) return small_binom(e, s);
    uint64_t best = UINT64_MAX;
    for (uint64_t d = 0; d <= e; ++d) {
        const uint64_t rest = minbinom_exhaustive(m - 1, e - d, s);
        if (rest == UINT64_MAX) continue;
        best = std::min(best, small_binom(d, s) + rest);
    }
    return best;
}

// maximum edge count of an a x b bipartite graph in which two left vertices
// share at most one right neighbour (no C4). Depth-first over row masks with
// nonincreasing-mask symmetry breaking.
inline void c4free_rows(uint64_t depth, uint64_t a, uint64_t b, uint32_t prev_mask,
                        std::vector<uint32_t>& rows, uint64_t edges, uint64_t& best) {
    if (edges + (a - depth) * b <= best) return;
    if (depth == a) {
        best = std::max(best, edges);
        return;
    }
    for (uint32_t m = prev_mask;; --m) {
        bool ok = true;
        for (uint64_t i = 0; i < depth; ++i) {
            const uint32_t common = rows[i] & m;
            if (common & (common - 1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            rows[depth] = m;
            c4free_rows(depth + 1, a, b, m, rows, edges + uint64_t(std::popcount(m)), best);
        }
        if (m == 0) break;
    }
}

inline uint64_t bipartite_c4free_max(uint64_t a, uint64_t b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return 0;
    uint64_t best = 0;
    std::vector<uint32_t> rows(a, 0);
    c4free_rows(0, a, b, uint32_t((uint64_t(1) << b) - 1), rows, 0, best);
    return best;
}

// single-part graph so any edge set is admissible
inline x3p::PartitionedGraph random_graph(std::mt19937_64& rng, uint64_t n, double p) {
    x3p::PartitionedGraph g({n});
    std::bernoulli_distribution coin(p);
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace oracle
