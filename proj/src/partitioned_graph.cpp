#include "partitioned_graph.hpp"

#include <algorithm>
#include <numeric>

namespace x3p {

PartitionedGraph::PartitionedGraph(std::vector<uint64_t> part_sizes, GraphMetadata meta)
    : part_sizes_(std::move(part_sizes)), meta_(std::move(meta)) {
    if (part_sizes_.empty()) fail(errc::invalid_argument, "graph needs at least one part");
    n_ = std::accumulate(part_sizes_.begin(), part_sizes_.end(), uint64_t(0));
    if (n_ > max_vertices) fail(errc::invalid_argument, "vertex count exceeds cap of 100000");
    part_offsets_.resize(part_sizes_.size());
    uint64_t off = 0;
    for (size_t i = 0; i < part_sizes_.size(); ++i) {
        part_offsets_[i] = off;
        off += part_sizes_[i];
    }
    adj_.assign(n_, Bitset(n_));
    labels_.assign(n_, {});
}

void PartitionedGraph::check_vertex(uint64_t v) const {
    if (v >= n_) fail(errc::invalid_argument, "vertex index " + std::to_string(v) + " out of range");
}

uint64_t PartitionedGraph::part_offset(uint64_t part) const {
    if (part >= part_sizes_.size()) fail(errc::invalid_argument, "part index out of range");
    return part_offsets_[part];
}

uint64_t PartitionedGraph::part_of(uint64_t v) const {
    check_vertex(v);
    size_t i = part_sizes_.size() - 1;
    while (part_offsets_[i] > v) --i;
    return i;
}

void PartitionedGraph::add_edge(uint64_t u, uint64_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(errc::precondition, "loop at vertex " + std::to_string(u));
    if (part_count() >= 2 && part_of(u) == part_of(v))
        fail(errc::precondition, "edge inside part " + std::to_string(part_of(u)));
    if (adj_[u][v]) fail(errc::precondition, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u][v] = true;
    adj_[v][u] = true;
}

bool PartitionedGraph::has_edge(uint64_t u, uint64_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u][v];
}

const Bitset& PartitionedGraph::row(uint64_t v) const {
    check_vertex(v);
    return adj_[v];
}

uint64_t PartitionedGraph::edge_count() const {
    uint64_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
}

const std::string& PartitionedGraph::label(uint64_t v) const {
    check_vertex(v);
    return labels_[v];
}

void PartitionedGraph::set_label(uint64_t v, std::string text) {
    check_vertex(v);
    labels_[v] = std::move(text);
}

void PartitionedGraph::validate() const {
    uint64_t sum = std::accumulate(part_sizes_.begin(), part_sizes_.end(), uint64_t(0));
    if (sum != n_ || adj_.size() != n_ || labels_.size() != n_)
        fail(errc::internal, "inconsistent sizes");
    for (uint64_t v = 0; v < n_; ++v) {
        if (adj_[v].size() != n_) fail(errc::internal, "bad adjacency row length");
        if (adj_[v][v]) fail(errc::internal, "loop at vertex " + std::to_string(v));
    }
    for (uint64_t u = 0; u < n_; ++u)
        for (uint64_t v = adj_[u].find_first(); v != Bitset::npos; v = adj_[u].find_next(v)) {
            if (!adj_[v][u]) fail(errc::internal, "asymmetric edge");
            if (part_count() >= 2 && part_of(u) == part_of(v))
                fail(errc::internal, "edge inside a part");
        }
}

GraphStats PartitionedGraph::stats() const {
    GraphStats s;
    s.part_sizes = part_sizes_;
    const size_t k = part_sizes_.size();
    s.pair_edges.assign(k, std::vector<uint64_t>(k, 0));
    uint64_t twice = 0;
    bool first = true;
    for (uint64_t v = 0; v < n_; ++v) {
        uint64_t d = adj_[v].count();
        twice += d;
        s.degree_histogram[d]++;
        if (first) {
            s.degree_min = s.degree_max = d;
            first = false;
        } else {
            s.degree_min = std::min(s.degree_min, d);
            s.degree_max = std::max(s.degree_max, d);
        }
    }
    s.edge_count = twice / 2;
    for (uint64_t u = 0; u < n_; ++u) {
        uint64_t pu = part_of(u);
        for (uint64_t v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v)) {
            uint64_t pv = part_of(v);
            s.pair_edges[pu][pv]++;
            if (pu != pv) s.pair_edges[pv][pu]++;
        }
    }
    return s;
}

Bitset common_neighborhood(const PartitionedGraph& g, std::span<const uint64_t> vertices) {
    if (vertices.empty()) fail(errc::invalid_argument, "common neighbourhood of empty set");
    Bitset acc = g.row(vertices[0]);
    for (size_t i = 1; i < vertices.size(); ++i) acc &= g.row(vertices[i]);
    return acc;
}

CommonDegreeResult max_common_degree(const PartitionedGraph& g, uint64_t s) {
    if (s < 1 || s > 4) fail(errc::invalid_argument, "subset size must be between 1 and 4");
    const uint64_t n = g.vertex_count();
    CommonDegreeResult best;
    if (n < s) return best;

    std::vector<uint64_t> idx(s);
    for (uint64_t i = 0; i < s; ++i) idx[i] = i;
    Bitset acc(n);
    // lexicographic subset enumeration; strict improvement keeps the first
    // (smallest) witness
    while (true) {
        acc = g.row(idx[0]);
        for (uint64_t i = 1; i < s; ++i) acc &= g.row(idx[i]);
        uint64_t c = acc.count();
        if (c > best.value || best.witness.empty()) {
            best.value = c;
            best.witness = idx;
        }
        int64_t pos = int64_t(s) - 1;
        while (pos >= 0 && idx[pos] == n - (s - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (uint64_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

FreenessResult is_kst_free(const PartitionedGraph& g, uint64_t s, uint64_t t) {
    if (s < 1 || t < 1) fail(errc::invalid_argument, "sides of K_{s,t} must be positive");
    FreenessResult res;
    res.s = s;
    res.t = t;
    uint64_t small = std::min(s, t), large = std::max(s, t);
    if (small > 4) fail(errc::invalid_argument, "smaller side of K_{s,t} exceeds 4");
    if (g.vertex_count() < small) return res;

    CommonDegreeResult cd = max_common_degree(g, small);
    if (cd.value <= large - 1) return res;

    res.free = false;
    FreenessWitness w;
    w.side_s = cd.witness;
    Bitset common = common_neighborhood(g, cd.witness);
    for (uint64_t v = common.find_first(); v != Bitset::npos && w.side_t.size() < large;
         v = common.find_next(v))
        w.side_t.push_back(v);
    res.witness = std::move(w);
    return res;
}

} // namespace x3p
