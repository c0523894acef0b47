#ifndef X3P_PARTITIONED_GRAPH_HPP
#define X3P_PARTITIONED_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"

namespace x3p {

using Bitset = boost::dynamic_bitset<uint64_t>;

struct GraphMetadata {
    std::string construction; // e.g. "gamma_qt q=5 t=2"
    uint64_t loops_discarded = 0;
};

struct GraphStats {
    uint64_t edge_count = 0;
    uint64_t degree_min = 0;
    uint64_t degree_max = 0;
    std::vector<uint64_t> part_sizes;
    std::map<uint64_t, uint64_t> degree_histogram;
    std::vector<std::vector<uint64_t>> pair_edges; // k x k, symmetric, zero diagonal
};

// Loopless undirected graph whose vertex range [0, n) is split into
// consecutive parts. With two or more parts no edge may lie inside a part;
// single-part graphs carry no such constraint (they are used for constructions
// whose chromatic structure is not tracked).
class PartitionedGraph {
public:
    static constexpr uint64_t max_vertices = 100000;

    PartitionedGraph(std::vector<uint64_t> part_sizes, GraphMetadata meta = {});

    uint64_t vertex_count() const { return n_; }
    uint64_t part_count() const { return part_sizes_.size(); }
    const std::vector<uint64_t>& part_sizes() const { return part_sizes_; }
    uint64_t part_offset(uint64_t part) const;
    uint64_t part_of(uint64_t v) const;

    void add_edge(uint64_t u, uint64_t v); // rejects loops, duplicates, intra-part edges
    bool has_edge(uint64_t u, uint64_t v) const;
    const Bitset& row(uint64_t v) const;
    uint64_t degree(uint64_t v) const { return row(v).count(); }
    uint64_t edge_count() const;

    const std::string& label(uint64_t v) const;
    void set_label(uint64_t v, std::string text);

    const GraphMetadata& metadata() const { return meta_; }
    GraphMetadata& metadata() { return meta_; }

    // re-checks every structural invariant; throws errc::internal on violation
    void validate() const;

    GraphStats stats() const;

private:
    void check_vertex(uint64_t v) const;

    uint64_t n_;
    std::vector<uint64_t> part_sizes_;
    std::vector<uint64_t> part_offsets_;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
    GraphMetadata meta_;
};

struct FreenessWitness {
    std::vector<uint64_t> side_s; // s vertices
    std::vector<uint64_t> side_t; // t common neighbours of side_s
};

struct FreenessResult {
    bool free = true;
    uint64_t s = 0, t = 0;
    std::optional<FreenessWitness> witness; // present iff not free
};

// intersection of the neighbourhoods of the given vertices; set must be nonempty
Bitset common_neighborhood(const PartitionedGraph& g, std::span<const uint64_t> vertices);

struct CommonDegreeResult {
    uint64_t value = 0;
    std::vector<uint64_t> witness; // lexicographically smallest s-set attaining value
};

// max over all s-subsets of the common neighbourhood size, 1 <= s <= 4
CommonDegreeResult max_common_degree(const PartitionedGraph& g, uint64_t s);

// K_{s,t} subgraph test via common degrees: free iff no s-set has t common
// neighbours. s and t are swapped internally so the enumerated side is the
// smaller one; the smaller side must not exceed 4.
FreenessResult is_kst_free(const PartitionedGraph& g, uint64_t s, uint64_t t);

inline FreenessResult is_c4_free(const PartitionedGraph& g) { return is_kst_free(g, 2, 2); }

} // namespace x3p

#endif
