#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "x3p.h"

using doctest::Approx;

TEST_CASE("version and error slots") {
    CHECK(x3p_version() != nullptr);
    CHECK(std::strlen(x3p_version()) > 0);
    CHECK(x3p_last_error() != nullptr);
}

TEST_CASE("bose chowla through the C surface") {
    uint64_t elements[5] = {0};
    uint64_t modulus = 0;
    REQUIRE(x3p_bose_chowla(5, elements, &modulus) == X3P_OK);
    CHECK(modulus == 24);
    const uint64_t expected[5] = {1, 3, 4, 8, 17};
    for (int i = 0; i < 5; ++i) CHECK(elements[i] == expected[i]);

    CHECK(x3p_bose_chowla(6, elements, &modulus) == X3P_E_NON_PRIME);
    CHECK(std::strlen(x3p_last_error()) > 0);
    CHECK(x3p_bose_chowla(5, nullptr, &modulus) == X3P_E_INVALID_ARGUMENT);

    int ok = 0;
    uint64_t sidon[3] = {0, 1, 3};
    REQUIRE(x3p_is_sidon(sidon, 3, 7, &ok) == X3P_OK);
    CHECK(ok == 1);
    uint64_t progression[3] = {0, 1, 2};
    REQUIRE(x3p_is_sidon(progression, 3, 7, &ok) == X3P_OK);
    CHECK(ok == 0);

    for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        REQUIRE(x3p_check_bose_chowla_structure(q, &ok) == X3P_OK);
        CHECK(ok == 1);
    }
}

TEST_CASE("graph construction and queries") {
    x3p_graph* g = nullptr;
    REQUIRE(x3p_build_gamma_qt(5, 2, &g) == X3P_OK);
    REQUIRE(g != nullptr);
    CHECK(x3p_graph_vertex_count(g) == 36);
    CHECK(x3p_graph_part_count(g) == 3);
    CHECK(x3p_graph_part_size(g, 0) == 12);
    CHECK(x3p_graph_part_size(g, 2) == 12);
    CHECK(x3p_graph_part_size(g, 7) == 0);  // documented out-of-range answer
    CHECK(x3p_graph_edge_count(g) == 180);
    CHECK(x3p_graph_degree_min(g) == 10);
    CHECK(x3p_graph_degree_max(g) == 10);
    CHECK(x3p_graph_loops_discarded(g) == 0);
    CHECK(x3p_graph_pair_edges(g, 0, 1) == 60);
    CHECK(x3p_graph_pair_edges(g, 1, 2) == 60);
    CHECK(std::string(x3p_graph_construction(g)).find("gamma_qt") != std::string::npos);
    CHECK(std::string(x3p_graph_vertex_label(g, 0)) == "X+0");
    CHECK(std::string(x3p_graph_vertex_label(g, 12)) == "Y+0");
    CHECK(std::string(x3p_graph_vertex_label(g, 999)) == "");

    uint64_t value = 0, witness[2] = {0};
    REQUIRE(x3p_max_common_degree(g, 2, &value, witness) == X3P_OK);
    CHECK(value == 4);

    int verified = -1;
    REQUIRE(x3p_is_kst_free(g, 2, 5, &verified, nullptr, nullptr) == X3P_OK);
    CHECK(verified == 1);

    uint64_t side_s[2] = {0}, side_t[4] = {0};
    REQUIRE(x3p_is_kst_free(g, 2, 4, &verified, side_s, side_t) == X3P_OK);
    CHECK(verified == 0);
    for (uint64_t u : side_s)
        for (uint64_t v : side_t) CHECK(x3p_graph_has_edge(g, u, v) == 1);

    x3p_graph_free(g);
    x3p_graph_free(nullptr);  // must be a no-op
}

TEST_CASE("construction failures set status and message") {
    x3p_graph* g = nullptr;
    CHECK(x3p_build_gamma_qt(7, 4, &g) == X3P_E_DIVISIBILITY);
    CHECK(g == nullptr);
    CHECK(std::strlen(x3p_last_error()) > 0);
    CHECK(x3p_build_gamma_qt(6, 1, &g) == X3P_E_NON_PRIME);
    CHECK(x3p_build_gamma_qt(5, 2, nullptr) == X3P_E_INVALID_ARGUMENT);
    const uint64_t zero_one[2] = {0, 1};
    CHECK(x3p_build_williford(6, zero_one, 2, 2, &g) == X3P_E_NOT_UNIT);
    CHECK(x3p_build_williford(5, zero_one, 2, 1, &g) == X3P_E_DIFFERENCE_OVERLAP);
}

TEST_CASE("sum quotient and prune through the C surface") {
    x3p_graph* g = nullptr;
    REQUIRE(x3p_build_sum_quotient(5, 12, &g) == X3P_OK);
    CHECK(x3p_graph_vertex_count(g) == 12);
    CHECK(x3p_graph_edge_count(g) == 28);
    CHECK(x3p_graph_loops_discarded(g) == 4);
    CHECK(x3p_graph_degree_min(g) == 4);
    CHECK(x3p_graph_degree_max(g) == 5);

    x3p_graph* pruned = nullptr;
    REQUIRE(x3p_random_partition_prune(g, 2, 7, &pruned) == X3P_OK);
    CHECK(x3p_graph_part_count(pruned) == 2);
    CHECK(x3p_graph_vertex_count(pruned) == 12);
    CHECK(x3p_graph_edge_count(pruned) < 28);
    x3p_graph_free(pruned);

    // generator whose subgroup meets A - A
    x3p_graph* bad = nullptr;
    CHECK(x3p_build_sum_quotient(5, 8, &bad) == X3P_E_PRECONDITION);
    x3p_graph_free(g);
}

TEST_CASE("graph files round trip") {
    x3p_graph* g = nullptr;
    const uint64_t zero_one[2] = {0, 1};
    REQUIRE(x3p_build_williford(5, zero_one, 2, 2, &g) == X3P_OK);
    const char* path = "capi_roundtrip_tmp.x3p";
    REQUIRE(x3p_graph_write_file(g, path) == X3P_OK);

    x3p_graph* back = nullptr;
    REQUIRE(x3p_graph_read_file(path, &back) == X3P_OK);
    CHECK(x3p_graph_vertex_count(back) == 15);
    CHECK(x3p_graph_edge_count(back) == 30);
    CHECK(x3p_graph_part_count(back) == 3);
    CHECK(std::string(x3p_graph_construction(back)) == x3p_graph_construction(g));
    bool same = true;
    for (uint64_t u = 0; u < 15 && same; ++u)
        for (uint64_t v = 0; v < 15 && same; ++v)
            same = x3p_graph_has_edge(g, u, v) == x3p_graph_has_edge(back, u, v);
    CHECK(same);
    CHECK(std::string(x3p_graph_vertex_label(back, 0)) == x3p_graph_vertex_label(g, 0));
    x3p_graph_free(back);
    x3p_graph_free(g);

    CHECK(x3p_graph_read_file("no_such_directory_x3p/missing.x3p", &back) == X3P_E_IO);

    std::FILE* f = std::fopen("capi_garbage_tmp.x3p", "w");
    REQUIRE(f != nullptr);
    std::fputs("not a graph header\n", f);
    std::fclose(f);
    CHECK(x3p_graph_read_file("capi_garbage_tmp.x3p", &back) == X3P_E_PARSE);
    std::remove("capi_garbage_tmp.x3p");
    std::remove(path);
}

TEST_CASE("bounds through the C surface") {
    double coeff = 0, expo = 0;
    REQUIRE(x3p_thm1_coefficient(2, 3, &coeff, &expo) == X3P_OK);
    CHECK(coeff == Approx(0.5773502692).epsilon(1e-9));
    CHECK(expo == Approx(1.5));
    CHECK(x3p_thm1_coefficient(1, 1, &coeff, &expo) == X3P_E_INVALID_ARGUMENT);

    double value = 0;
    REQUIRE(x3p_lagrange_closed_form(2, 2, 1.0 / 3, 1.0 / 3, &value) == X3P_OK);
    CHECK(value == Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-12));

    double k2u = 0, k2l = 0, k3u = 0, k3l = 0;
    REQUIRE(x3p_thm4_coefficients(3, 3, &k2u, &k2l, &k3u, &k3l) == X3P_OK);
    CHECK(k2u == Approx(0.5773502692).epsilon(1e-9));
    CHECK(k3l == Approx(1.0 / 3.0).epsilon(1e-12));

    double ex = 0, exd = 0, chi2 = 0;
    REQUIRE(x3p_classical_coefficients(2, 3, &ex, &exd, &chi2) == X3P_OK);
    CHECK(exd == Approx(1.0).epsilon(1e-12));

    REQUIRE(x3p_nikiforov_bound(100, 100, 2, 2, &value) == X3P_OK);
    CHECK(value == Approx(1100.0).epsilon(1e-12));

    uint64_t u = 0;
    REQUIRE(x3p_binom(10, 3, &u) == X3P_OK);
    CHECK(u == 120);
    REQUIRE(x3p_minbinom(3, 7, 2, &u) == X3P_OK);
    CHECK(u == 5);

    uint64_t witness[3] = {0};
    REQUIRE(x3p_exact_tripartite_bound(5, 5, 5, 2, 2, 0, &u, witness) == X3P_OK);
    CHECK(u == 30);
    CHECK(witness[0] == 10);

    uint64_t parts3[3] = {0};
    REQUIRE(x3p_exact_chi3_bound(15, 2, 2, 0, &u, parts3, witness) == X3P_OK);
    CHECK(u == 30);
    CHECK(parts3[0] == 5);
    CHECK(parts3[1] == 5);
    CHECK(parts3[2] == 5);
    CHECK(x3p_exact_chi3_bound(123, 2, 2, 1, &u, parts3, witness) == X3P_E_BUDGET_EXCEEDED);

    uint64_t parts2[2] = {0};
    REQUIRE(x3p_exact_chi2_bound(123, 2, 2, &u, parts2) == X3P_OK);
    CHECK(u == 507);
    CHECK(parts2[0] + parts2[1] == 123);

    int ok = 0;
    uint64_t n = 0, edges = 0;
    REQUIRE(x3p_gamma_lower_bound_check(5, 2, &ok, &n, &edges) == X3P_OK);
    CHECK(ok == 1);
    CHECK(n == 36);
    CHECK(edges == 180);
}

TEST_CASE("numeric oracle through the C surface") {
    double value = 0, d1 = 0, d2 = 0;
    REQUIRE(x3p_lagrange_numeric_oracle(2, 2, 100, 1, 7, &value, &d1, &d2) == X3P_OK);
    CHECK(std::abs(value - std::sqrt(1.0 / 6.0)) <= 1e-4);
    CHECK(std::abs(d1 - 1.0 / 3.0) <= 0.011);
    CHECK(std::abs(d2 - 1.0 / 3.0) <= 0.011);
}

TEST_CASE("difference family helpers through the C surface") {
    const uint64_t elems[4] = {0, 1, 0, 2};
    const size_t lens[2] = {2, 2};
    int ok = 0;
    REQUIRE(x3p_verify_difference_family(5, 1, elems, lens, 2, &ok) == X3P_OK);
    CHECK(ok == 1);
    REQUIRE(x3p_verify_difference_family(7, 1, elems, lens, 2, &ok) == X3P_OK);
    CHECK(ok == 0);
    const size_t ragged[2] = {2, 1};
    CHECK(x3p_verify_difference_family(7, 1, elems, ragged, 2, &ok) ==
          X3P_E_INVALID_ARGUMENT);

    const uint64_t a[2] = {0, 1};
    REQUIRE(x3p_williford_condition(5, a, 2, 2, &ok) == X3P_OK);
    CHECK(ok == 1);
    REQUIRE(x3p_williford_condition(5, a, 2, 1, &ok) == X3P_OK);
    CHECK(ok == 0);

    uint64_t num = 0, den = 0;
    REQUIRE(x3p_coverage_ratio(7, a, 2, 2, &num, &den) == X3P_OK);
    CHECK(num == 4);
    CHECK(den == 6);

    const uint64_t a41[5] = {1, 10, 16, 18, 37};
    uint64_t canon[5] = {0};
    REQUIRE(x3p_canonical_translate_form(41, a41, 5, canon) == X3P_OK);
    const uint64_t expected[5] = {0, 1, 4, 11, 29};
    for (int i = 0; i < 5; ++i) CHECK(canon[i] == expected[i]);
}

TEST_CASE("search through the C surface") {
    x3p_search_result* res = nullptr;
    REQUIRE(x3p_search_translate_pairs(5, 2, 1, 0.0, 0, 0, &res) == X3P_OK);
    REQUIRE(res != nullptr);
    CHECK(x3p_search_result_count(res) == 2);
    CHECK(x3p_search_result_complete(res) == 1);
    CHECK(x3p_search_result_nodes(res) > 0);
    uint64_t a[2] = {0}, c = 0, num = 0, den = 0;
    REQUIRE(x3p_search_result_pair(res, 0, a, &c, &num, &den) == X3P_OK);
    CHECK(a[0] == 0);
    CHECK(a[1] == 1);
    CHECK(c == 2);
    CHECK(num == 4);
    CHECK(den == 4);
    CHECK(x3p_search_result_pair(res, 9, a, &c, &num, &den) == X3P_E_INVALID_ARGUMENT);
    x3p_search_result_free(res);
    x3p_search_result_free(nullptr);

    CHECK(x3p_search_translate_pairs(0, 2, 1, 0.0, 0, 0, &res) == X3P_E_INVALID_ARGUMENT);
}

TEST_CASE("equality certification") {
    x3p_certify_report rep;
    const uint64_t zero_one[2] = {0, 1};

    REQUIRE(x3p_certify_equality(15, 2, 2, 5, zero_one, 2, 2, 0, &rep) == X3P_OK);
    CHECK(rep.certified == 1);
    CHECK(rep.freeness_verified == 1);
    CHECK(rep.witness_edges == 30);
    CHECK(rep.bound_value == 30);
    CHECK(rep.bound_parts[0] == 5);
    CHECK(rep.reason[0] == '\0');

    const uint64_t a41[5] = {1, 10, 16, 18, 37};
    REQUIRE(x3p_certify_equality(123, 2, 2, 41, a41, 5, 9, 0, &rep) == X3P_OK);
    CHECK(rep.certified == 1);
    CHECK(rep.witness_edges == 615);
    CHECK(rep.bound_value == 615);

    // one more vertex breaks equality: the bound moves to 621
    REQUIRE(x3p_certify_equality(124, 2, 2, 41, a41, 5, 9, 0, &rep) == X3P_OK);
    CHECK(rep.certified == 0);
    CHECK(rep.freeness_verified == 1);
    CHECK(rep.witness_edges == 615);
    CHECK(rep.bound_value == 621);
    CHECK(std::strlen(rep.reason) > 0);

    // a witness that cannot even be built is a failed certificate, not an error
    REQUIRE(x3p_certify_equality(15, 2, 2, 5, zero_one, 2, 1, 0, &rep) == X3P_OK);
    CHECK(rep.certified == 0);
    CHECK(std::strlen(rep.reason) > 0);

    // witness larger than the vertex budget
    REQUIRE(x3p_certify_equality(10, 2, 2, 5, zero_one, 2, 2, 0, &rep) == X3P_OK);
    CHECK(rep.certified == 0);

    CHECK(x3p_certify_equality(15, 2, 2, 5, zero_one, 2, 2, 0, nullptr) == X3P_E_INVALID_ARGUMENT);
}
