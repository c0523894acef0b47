#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "partitioned_graph.hpp"

using namespace x3p;

namespace {

// complete bipartite K_{a,b} as a two part graph
PartitionedGraph complete_bipartite(uint64_t a, uint64_t b) {
    PartitionedGraph g({a, b});
    for (uint64_t u = 0; u < a; ++u)
        for (uint64_t v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

} // namespace

TEST_CASE("part bookkeeping") {
    PartitionedGraph g({2, 3, 4});
    CHECK(g.vertex_count() == 9);
    CHECK(g.part_count() == 3);
    CHECK(g.part_offset(0) == 0);
    CHECK(g.part_offset(1) == 2);
    CHECK(g.part_offset(2) == 5);
    CHECK(g.part_of(0) == 0);
    CHECK(g.part_of(1) == 0);
    CHECK(g.part_of(2) == 1);
    CHECK(g.part_of(4) == 1);
    CHECK(g.part_of(5) == 2);
    CHECK(g.part_of(8) == 2);
    CHECK_THROWS_AS(g.part_offset(3), Error);
    CHECK_THROWS_AS(g.part_of(9), Error);
}

TEST_CASE("edge insertion rules") {
    PartitionedGraph g({2, 2});
    g.add_edge(0, 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 2), Error);  // duplicate
    CHECK_THROWS_AS(g.add_edge(3, 3), Error);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 1), Error);  // same part
    CHECK_THROWS_AS(g.add_edge(0, 4), Error);  // out of range
    try {
        g.add_edge(0, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::precondition);
    }

    // single part graphs allow any non loop edge
    PartitionedGraph h({4});
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    CHECK(h.edge_count() == 2);
    h.validate();
}

TEST_CASE("labels and metadata") {
    PartitionedGraph g({1, 1}, {"demo", 3});
    CHECK(g.metadata().construction == "demo");
    CHECK(g.metadata().loops_discarded == 3);
    CHECK(g.label(0) == "");
    g.set_label(0, "first");
    CHECK(g.label(0) == "first");
    CHECK_THROWS_AS(g.set_label(2, "x"), Error);
}

TEST_CASE("stats on a hand built graph") {
    PartitionedGraph g({2, 2, 2});
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(2, 4);
    g.add_edge(0, 5);
    GraphStats st = g.stats();
    CHECK(st.edge_count == 5);
    CHECK(st.degree_min == 1);
    CHECK(st.degree_max == 3);
    CHECK(st.part_sizes == std::vector<uint64_t>{2, 2, 2});
    CHECK(st.pair_edges[0][1] == 3);
    CHECK(st.pair_edges[1][0] == 3);
    CHECK(st.pair_edges[0][2] == 1);
    CHECK(st.pair_edges[1][2] == 1);
    CHECK(st.pair_edges[0][0] == 0);
    CHECK(st.degree_histogram.at(1) == 4);  // vertices 1, 3, 4, 5
    CHECK(st.degree_histogram.at(3) == 2);  // vertices 0, 2
}

TEST_CASE("common neighbourhood") {
    PartitionedGraph g = complete_bipartite(3, 3);
    std::vector<uint64_t> pair{0, 1};
    Bitset cn = common_neighborhood(g, pair);
    CHECK(cn.count() == 3);
    CHECK(cn.test(3));
    CHECK(cn.test(4));
    CHECK(cn.test(5));
    std::vector<uint64_t> empty;
    CHECK_THROWS_AS(common_neighborhood(g, empty), Error);
}

TEST_CASE("max common degree and witness order") {
    PartitionedGraph g = complete_bipartite(3, 4);
    CommonDegreeResult r = max_common_degree(g, 2);
    CHECK(r.value == 4);
    CHECK(r.witness == std::vector<uint64_t>{0, 1});  // lexicographically smallest
    CommonDegreeResult r3 = max_common_degree(g, 3);
    CHECK(r3.value == 4);
    CHECK(r3.witness == std::vector<uint64_t>{0, 1, 2});
    CHECK_THROWS_AS(max_common_degree(g, 0), Error);
    CHECK_THROWS_AS(max_common_degree(g, 5), Error);

    // monotone in s
    std::mt19937_64 rng(11);
    PartitionedGraph rnd = oracle::random_graph(rng, 18, 0.4);
    CHECK(max_common_degree(rnd, 2).value >= max_common_degree(rnd, 3).value);
    CHECK(max_common_degree(rnd, 3).value >= max_common_degree(rnd, 4).value);
}

TEST_CASE("freeness on complete bipartite graphs") {
    PartitionedGraph g = complete_bipartite(2, 3);
    FreenessResult r = is_kst_free(g, 2, 3);
    CHECK_FALSE(r.free);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->side_s.size() == 2);
    CHECK(r.witness->side_t.size() == 3);
    for (uint64_t u : r.witness->side_s)
        for (uint64_t v : r.witness->side_t) CHECK(g.has_edge(u, v));

    // same answer with the sides swapped
    CHECK_FALSE(is_kst_free(g, 3, 2).free);
    CHECK(is_kst_free(g, 2, 4).free);
    CHECK(is_kst_free(g, 3, 3).free);
    CHECK(is_c4_free(complete_bipartite(2, 1)).free);
    CHECK_FALSE(is_c4_free(complete_bipartite(2, 2)).free);
}

TEST_CASE("freeness guards") {
    PartitionedGraph g = complete_bipartite(6, 6);
    CHECK_THROWS_AS(is_kst_free(g, 0, 2), Error);
    CHECK_THROWS_AS(is_kst_free(g, 5, 6), Error);  // smaller side above 4
    CHECK_FALSE(is_kst_free(g, 4, 6).free);        // smaller side 4 is fine
}

TEST_CASE("freeness agrees with the enumeration oracle on random graphs") {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<uint64_t> nd(4, 20);
    std::uniform_real_distribution<double> pd(0.1, 0.6);
    std::uniform_int_distribution<uint64_t> std_(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const uint64_t n = nd(rng);
        PartitionedGraph g = oracle::random_graph(rng, n, pd(rng));
        const uint64_t s = std_(rng), t = std_(rng);
        CAPTURE(trial);
        CAPTURE(n);
        CAPTURE(s);
        CAPTURE(t);
        FreenessResult r = is_kst_free(g, s, t);
        CHECK(r.free == !oracle::has_kst(g, s, t));
        if (!r.free) {
            REQUIRE(r.witness.has_value());
            for (uint64_t u : r.witness->side_s)
                for (uint64_t v : r.witness->side_t) CHECK(g.has_edge(u, v));
        }
        if (n <= 12) CHECK(r.free == !oracle::has_kst_tiny(g, s, t));
    }
}

TEST_CASE("validate catches nothing on good graphs") {
    PartitionedGraph g = complete_bipartite(3, 3);
    g.validate();
    PartitionedGraph empty({0, 0});
    empty.validate();
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);
}
