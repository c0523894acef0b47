#ifndef X3P_CONSTRUCTIONS_HPP
#define X3P_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "partitioned_graph.hpp"
#include "sidon.hpp"

namespace x3p {

// Cyclic subgroup of Z_m with its cosets. The subgroup generated by g is the
// set of multiples of d = gcd(m, g), so cosets are the residues mod d and the
// canonical representative of a coset is its smallest member x mod d.
struct QuotientSpec {
    uint64_t m = 0;
    uint64_t generator = 0;
    std::vector<uint64_t> h_elements; // sorted; {0, d, 2d, ...}
    std::vector<uint64_t> coset_reps; // {0, 1, ..., d-1}

    uint64_t coset_count() const { return coset_reps.size(); }
    uint64_t coset_index(uint64_t x) const { return x % coset_reps.size(); }
};

QuotientSpec subgroup_generated(uint64_t m, uint64_t g);

// Bipartite quotient of the Bose-Chowla graph: parts are two copies of the
// cosets of H = <((q-1)/t)(q+1)> in Z_{q^2-1}, with x+H ~ y+H when y - x lands
// in A + H. Requires t | q-1. The result is q-regular and K_{2,t+1}-free.
PartitionedGraph build_g_qt(uint64_t q, uint64_t t);

// Tripartite version: three copies of the cosets with the bipartite rule
// applied cyclically X->Y->Z->X. 2q-regular, K_{2,2t+1}-free.
PartitionedGraph build_gamma_qt(uint64_t q, uint64_t t);

// Single-part quotient with the symmetric rule x+H ~ y+H when x + y lands in
// A + H. Requires (A - A) ^ H = {0}. Loops are discarded and counted in the
// metadata, so degrees are |A| or |A| - 1. K_{2,|H|+1}-free.
PartitionedGraph build_sum_quotient(uint64_t m, const QuotientSpec& h, const SidonSet& a);

// Tripartite Sidon-translate graph on Z_v: S1 = Z_v, S2 = translates of A,
// S3 = translates of B = cA. x ~ A+j when x - j in A, x ~ B+i when x - i in B,
// A+j ~ B+i when i - cj in A. Requires gcd(c, v) = 1, A Sidon, and
// (A-A) ^ (B-B) = {0}. 2|A|-regular and C4-free.
PartitionedGraph build_williford(uint64_t v, const std::vector<uint64_t>& a, uint64_t c);

// Assigns each vertex to one of k classes with a seeded generator, drops
// intra-class edges and relabels vertices so classes become consecutive parts.
// Keeps roughly a (1 - 1/k) fraction of the edges.
PartitionedGraph random_k_partition_prune(const PartitionedGraph& g, uint64_t k, uint64_t seed);

} // namespace x3p

#endif
