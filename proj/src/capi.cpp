#include "../include/x3p.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>

#include "bounds.hpp"
#include "constructions.hpp"
#include "designs.hpp"
#include "error.hpp"
#include "graph_io.hpp"
#include "partitioned_graph.hpp"
#include "sidon.hpp"

// handles own an immutable graph plus its precomputed statistics
struct x3p_graph {
    x3p::PartitionedGraph g;
    x3p::GraphStats st;

    explicit x3p_graph(x3p::PartitionedGraph graph) : g(std::move(graph)), st(g.stats()) {}
};

struct x3p_search_result {
    x3p::SearchOutcome o;
};

namespace {

thread_local std::string t_last_error;

// the C status enum mirrors x3p::errc value for value
static_assert(int(x3p::errc::ok) == X3P_OK);
static_assert(int(x3p::errc::invalid_argument) == X3P_E_INVALID_ARGUMENT);
static_assert(int(x3p::errc::non_prime) == X3P_E_NON_PRIME);
static_assert(int(x3p::errc::order_too_large) == X3P_E_ORDER_TOO_LARGE);
static_assert(int(x3p::errc::mixed_fields) == X3P_E_MIXED_FIELDS);
static_assert(int(x3p::errc::bad_subfield_order) == X3P_E_BAD_SUBFIELD_ORDER);
static_assert(int(x3p::errc::divisibility) == X3P_E_DIVISIBILITY);
static_assert(int(x3p::errc::not_subgroup) == X3P_E_NOT_SUBGROUP);
static_assert(int(x3p::errc::not_unit) == X3P_E_NOT_UNIT);
static_assert(int(x3p::errc::not_sidon) == X3P_E_NOT_SIDON);
static_assert(int(x3p::errc::difference_overlap) == X3P_E_DIFFERENCE_OVERLAP);
static_assert(int(x3p::errc::precondition) == X3P_E_PRECONDITION);
static_assert(int(x3p::errc::parse) == X3P_E_PARSE);
static_assert(int(x3p::errc::io) == X3P_E_IO);
static_assert(int(x3p::errc::budget_exceeded) == X3P_E_BUDGET_EXCEEDED);
static_assert(int(x3p::errc::internal) == X3P_E_INTERNAL);

x3p_status arg_error(const char* msg) {
    t_last_error = msg;
    return X3P_E_INVALID_ARGUMENT;
}

template <typename F>
x3p_status guard(F&& f) {
    try {
        f();
        t_last_error.clear();
        return X3P_OK;
    } catch (const x3p::Error& e) {
        t_last_error = e.what();
        return static_cast<x3p_status>(static_cast<int>(e.code()));
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return X3P_E_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return X3P_E_INTERNAL;
    }
}

void copy_out(const std::vector<uint64_t>& src, uint64_t* dst) {
    if (dst)
        std::copy(src.begin(), src.end(), dst);
}

} // namespace

extern "C" {

const char* x3p_version(void) { return "1.0.0"; }

const char* x3p_last_error(void) { return t_last_error.c_str(); }

void x3p_graph_free(x3p_graph* g) { delete g; }

void x3p_search_result_free(x3p_search_result* r) { delete r; }

/* ---- Sidon sets ------------------------------------------------------- */

x3p_status x3p_bose_chowla(uint64_t q, uint64_t* elements, uint64_t* modulus) {
    if (!elements || !modulus) return arg_error("null output pointer");
    return guard([&] {
        x3p::SidonSet a = x3p::bose_chowla(q);
        std::copy(a.elements.begin(), a.elements.end(), elements);
        *modulus = a.modulus;
    });
}

x3p_status x3p_is_sidon(const uint64_t* elements, size_t len, uint64_t modulus, int* ok) {
    if (!elements || !ok) return arg_error("null pointer");
    return guard([&] { *ok = x3p::is_sidon({elements, len}, modulus) ? 1 : 0; });
}

x3p_status x3p_check_bose_chowla_structure(uint64_t q, int* ok) {
    if (!ok) return arg_error("null output pointer");
    return guard([&] {
        x3p::SidonSet a = x3p::bose_chowla(q);
        *ok = x3p::check_bose_chowla_structure(q, a) ? 1 : 0;
    });
}

/* ---- graph constructions ---------------------------------------------- */

x3p_status x3p_build_g_qt(uint64_t q, uint64_t t, x3p_graph** out) {
    if (!out) return arg_error("null output pointer");
    return guard([&] { *out = new x3p_graph(x3p::build_g_qt(q, t)); });
}

x3p_status x3p_build_gamma_qt(uint64_t q, uint64_t t, x3p_graph** out) {
    if (!out) return arg_error("null output pointer");
    return guard([&] { *out = new x3p_graph(x3p::build_gamma_qt(q, t)); });
}

x3p_status x3p_build_sum_quotient(uint64_t q, uint64_t generator, x3p_graph** out) {
    if (!out) return arg_error("null output pointer");
    return guard([&] {
        x3p::SidonSet a = x3p::bose_chowla(q);
        x3p::QuotientSpec h = x3p::subgroup_generated(a.modulus, generator);
        *out = new x3p_graph(x3p::build_sum_quotient(a.modulus, h, a));
    });
}

x3p_status x3p_build_williford(uint64_t v, const uint64_t* a, size_t len, uint64_t c,
                               x3p_graph** out) {
    if (!out || !a) return arg_error("null pointer");
    return guard([&] {
        std::vector<uint64_t> elems(a, a + len);
        *out = new x3p_graph(x3p::build_williford(v, elems, c));
    });
}

x3p_status x3p_random_partition_prune(const x3p_graph* g, uint64_t k, uint64_t seed,
                                      x3p_graph** out) {
    if (!g || !out) return arg_error("null pointer");
    return guard([&] { *out = new x3p_graph(x3p::random_k_partition_prune(g->g, k, seed)); });
}

/* ---- graph queries ----------------------------------------------------- */

uint64_t x3p_graph_vertex_count(const x3p_graph* g) { return g ? g->g.vertex_count() : 0; }

uint64_t x3p_graph_part_count(const x3p_graph* g) { return g ? g->g.part_count() : 0; }

uint64_t x3p_graph_part_size(const x3p_graph* g, uint64_t part) {
    if (!g || part >= g->g.part_count()) return 0;
    return g->g.part_sizes()[part];
}

uint64_t x3p_graph_edge_count(const x3p_graph* g) { return g ? g->st.edge_count : 0; }

uint64_t x3p_graph_degree_min(const x3p_graph* g) { return g ? g->st.degree_min : 0; }

uint64_t x3p_graph_degree_max(const x3p_graph* g) { return g ? g->st.degree_max : 0; }

uint64_t x3p_graph_loops_discarded(const x3p_graph* g) {
    return g ? g->g.metadata().loops_discarded : 0;
}

uint64_t x3p_graph_pair_edges(const x3p_graph* g, uint64_t i, uint64_t j) {
    if (!g || i >= g->g.part_count() || j >= g->g.part_count()) return 0;
    return g->st.pair_edges[i][j];
}

int x3p_graph_has_edge(const x3p_graph* g, uint64_t u, uint64_t v) {
    if (!g || u >= g->g.vertex_count() || v >= g->g.vertex_count()) return 0;
    return g->g.has_edge(u, v) ? 1 : 0;
}

const char* x3p_graph_construction(const x3p_graph* g) {
    return g ? g->g.metadata().construction.c_str() : "";
}

const char* x3p_graph_vertex_label(const x3p_graph* g, uint64_t v) {
    if (!g || v >= g->g.vertex_count()) return "";
    return g->g.label(v).c_str();
}

x3p_status x3p_max_common_degree(const x3p_graph* g, uint64_t s, uint64_t* value,
                                 uint64_t* witness) {
    if (!g || !value) return arg_error("null pointer");
    return guard([&] {
        x3p::CommonDegreeResult r = x3p::max_common_degree(g->g, s);
        *value = r.value;
        copy_out(r.witness, witness);
    });
}

x3p_status x3p_is_kst_free(const x3p_graph* g, uint64_t s, uint64_t t, int* verified,
                           uint64_t* witness_s, uint64_t* witness_t) {
    if (!g || !verified) return arg_error("null pointer");
    return guard([&] {
        x3p::FreenessResult r = x3p::is_kst_free(g->g, s, t);
        *verified = r.free ? 1 : 0;
        if (!r.free && r.witness) {
            copy_out(r.witness->side_s, witness_s);
            copy_out(r.witness->side_t, witness_t);
        }
    });
}

/* ---- x3p-graph v1 files ------------------------------------------------ */

x3p_status x3p_graph_write_file(const x3p_graph* g, const char* path) {
    if (!g || !path) return arg_error("null pointer");
    return guard([&] { x3p::write_graph_file(g->g, path); });
}

x3p_status x3p_graph_read_file(const char* path, x3p_graph** out) {
    if (!path || !out) return arg_error("null pointer");
    return guard([&] { *out = new x3p_graph(x3p::read_graph_file(path)); });
}

/* ---- bounds ------------------------------------------------------------ */

x3p_status x3p_thm1_coefficient(uint64_t s, uint64_t t, double* coefficient, double* exponent) {
    if (!coefficient || !exponent) return arg_error("null output pointer");
    return guard([&] {
        x3p::AsymptoticBound b = x3p::thm1_coefficient(s, t);
        *coefficient = b.coefficient;
        *exponent = b.exponent;
    });
}

x3p_status x3p_lagrange_closed_form(uint64_t s, uint64_t t, double d1, double d2,
                                    double* value) {
    if (!value) return arg_error("null output pointer");
    return guard([&] { *value = x3p::lagrange_closed_form(s, t, d1, d2); });
}

x3p_status x3p_lagrange_numeric_oracle(uint64_t s, uint64_t t, uint64_t grid, uint64_t restarts,
                                       uint64_t seed, double* value, double* d1, double* d2) {
    if (!value) return arg_error("null output pointer");
    return guard([&] {
        x3p::OracleResult r = x3p::lagrange_numeric_oracle(s, t, grid, restarts, seed);
        *value = r.value;
        if (d1) *d1 = r.delta1;
        if (d2) *d2 = r.delta2;
    });
}

x3p_status x3p_thm4_coefficients(uint64_t t, uint64_t k, double* k2t_upper, double* k2t_lower,
                                 double* k33_upper, double* k33_lower) {
    if (!k2t_upper || !k2t_lower || !k33_upper || !k33_lower)
        return arg_error("null output pointer");
    return guard([&] {
        x3p::Thm4Coefficients c = x3p::thm4_coefficients(t, k);
        *k2t_upper = c.k2t_upper;
        *k2t_lower = c.k2t_lower;
        *k33_upper = c.k33_upper;
        *k33_lower = c.k33_lower;
    });
}

x3p_status x3p_classical_coefficients(uint64_t s, uint64_t t, double* ex_k2t,
                                      double* ex_k2t_display, double* chi2_k2t) {
    if (!ex_k2t || !ex_k2t_display || !chi2_k2t) return arg_error("null output pointer");
    return guard([&] {
        x3p::ClassicalCoefficients c = x3p::classical_coefficients(s, t);
        *ex_k2t = c.ex_k2t;
        *ex_k2t_display = c.ex_k2t_display;
        *chi2_k2t = c.chi2_k2t;
    });
}

x3p_status x3p_nikiforov_bound(uint64_t m, uint64_t n, uint64_t s, uint64_t t, double* value) {
    if (!value) return arg_error("null output pointer");
    return guard([&] { *value = x3p::nikiforov_bound(m, n, s, t); });
}

x3p_status x3p_binom(uint64_t n, uint64_t k, uint64_t* value) {
    if (!value) return arg_error("null output pointer");
    return guard([&] { *value = x3p::binom(n, k); });
}

x3p_status x3p_minbinom(uint64_t m, uint64_t e, uint64_t s, uint64_t* value) {
    if (!value) return arg_error("null output pointer");
    return guard([&] { *value = x3p::minbinom(m, e, s); });
}

x3p_status x3p_exact_tripartite_bound(uint64_t n1, uint64_t n2, uint64_t n3, uint64_t s,
                                      uint64_t t, uint64_t budget, uint64_t* value,
                                      uint64_t* witness_e) {
    if (!value) return arg_error("null output pointer");
    return guard([&] {
        x3p::TripartiteBound b = x3p::exact_tripartite_bound(
            n1, n2, n3, s, t, budget ? budget : x3p::default_scan_budget);
        *value = b.value;
        if (witness_e) std::copy(b.witness.begin(), b.witness.end(), witness_e);
    });
}

x3p_status x3p_exact_chi3_bound(uint64_t n, uint64_t s, uint64_t t, uint64_t budget,
                                uint64_t* value, uint64_t* parts, uint64_t* witness_e) {
    if (!value) return arg_error("null output pointer");
    return guard([&] {
        x3p::TripartiteBound b =
            x3p::exact_chi3_bound(n, s, t, budget ? budget : x3p::default_scan_budget);
        *value = b.value;
        if (parts) std::copy(b.partition.begin(), b.partition.end(), parts);
        if (witness_e) std::copy(b.witness.begin(), b.witness.end(), witness_e);
    });
}

x3p_status x3p_exact_chi2_bound(uint64_t n, uint64_t s, uint64_t t, uint64_t* value,
                                uint64_t* parts) {
    if (!value) return arg_error("null output pointer");
    return guard([&] {
        x3p::BipartiteBound b = x3p::exact_chi2_bound(n, s, t);
        *value = b.value;
        if (parts) std::copy(b.partition.begin(), b.partition.end(), parts);
    });
}

x3p_status x3p_gamma_lower_bound_check(uint64_t q, uint64_t t, int* ok, uint64_t* n,
                                       uint64_t* edges) {
    if (!ok) return arg_error("null output pointer");
    return guard([&] {
        x3p::GammaLowerBoundCheck c = x3p::gamma_lower_bound_check(q, t);
        *ok = c.ok ? 1 : 0;
        if (n) *n = c.n;
        if (edges) *edges = c.edges;
    });
}

/* ---- difference families ----------------------------------------------- */

x3p_status x3p_verify_difference_family(uint64_t v, uint64_t lambda, const uint64_t* elems,
                                        const size_t* block_lens, size_t nblocks, int* ok) {
    if (!elems || !block_lens || !ok) return arg_error("null pointer");
    return guard([&] {
        x3p::DifferenceFamily f;
        f.v = v;
        f.lambda = lambda;
        size_t at = 0;
        for (size_t b = 0; b < nblocks; ++b) {
            f.blocks.emplace_back(elems + at, elems + at + block_lens[b]);
            at += block_lens[b];
        }
        *ok = x3p::verify_difference_family(f).ok ? 1 : 0;
    });
}

x3p_status x3p_williford_condition(uint64_t v, const uint64_t* a, size_t len, uint64_t c,
                                   int* ok) {
    if (!a || !ok) return arg_error("null pointer");
    return guard([&] {
        x3p::TranslatePair p = x3p::TranslatePair::create(v, {a, a + len}, c);
        *ok = x3p::williford_condition(p) ? 1 : 0;
    });
}

x3p_status x3p_coverage_ratio(uint64_t v, const uint64_t* a, size_t len, uint64_t c,
                              uint64_t* num, uint64_t* den) {
    if (!a || !num || !den) return arg_error("null pointer");
    return guard([&] {
        x3p::TranslatePair p = x3p::TranslatePair::create(v, {a, a + len}, c);
        x3p::Rational r = x3p::coverage_ratio(p);
        *num = r.num;
        *den = r.den;
    });
}

x3p_status x3p_canonical_translate_form(uint64_t v, const uint64_t* a, size_t len,
                                        uint64_t* out) {
    if (!a || !out) return arg_error("null pointer");
    return guard([&] {
        x3p::TranslatePair p = x3p::TranslatePair::create(v, {a, a + len}, 1);
        copy_out(x3p::canonical_translate_form(p).a, out);
    });
}

x3p_status x3p_search_translate_pairs(uint64_t v, uint64_t k, int require_full_coverage,
                                      double min_coverage, uint64_t budget, uint64_t threads,
                                      x3p_search_result** out) {
    if (!out) return arg_error("null output pointer");
    return guard([&] {
        x3p::SearchOptions opts;
        opts.require_full_coverage = require_full_coverage != 0;
        opts.min_coverage = min_coverage;
        if (budget) opts.budget = budget;
        opts.threads = threads;
        *out = new x3p_search_result{x3p::search_translate_pairs(v, k, opts)};
    });
}

uint64_t x3p_search_result_count(const x3p_search_result* r) {
    return r ? r->o.pairs.size() : 0;
}

int x3p_search_result_complete(const x3p_search_result* r) {
    return r && r->o.status == x3p::SearchStatus::complete ? 1 : 0;
}

uint64_t x3p_search_result_nodes(const x3p_search_result* r) { return r ? r->o.nodes : 0; }

x3p_status x3p_search_result_pair(const x3p_search_result* r, uint64_t index, uint64_t* a,
                                  uint64_t* c, uint64_t* coverage_num, uint64_t* coverage_den) {
    if (!r) return arg_error("null result handle");
    if (index >= r->o.pairs.size()) return arg_error("pair index out of range");
    const x3p::FoundPair& p = r->o.pairs[index];
    copy_out(p.pair.a, a);
    if (c) *c = p.pair.c;
    if (coverage_num) *coverage_num = p.coverage.num;
    if (coverage_den) *coverage_den = p.coverage.den;
    t_last_error.clear();
    return X3P_OK;
}

/* ---- equality certification ------------------------------------------- */

x3p_status x3p_certify_equality(uint64_t n, uint64_t s, uint64_t t, uint64_t v,
                                const uint64_t* a, size_t len, uint64_t c, uint64_t budget,
                                x3p_certify_report* report) {
    if (!a || !report) return arg_error("null pointer");
    return guard([&] {
        std::memset(report, 0, sizeof(*report));
        auto set_reason = [&](const std::string& r) {
            std::snprintf(report->reason, sizeof(report->reason), "%.*s",
                          int(sizeof(report->reason) - 1), r.c_str());
        };

        // the bound is computed first: a budget overrun aborts the call rather
        // than masquerading as a failed certificate
        x3p::TripartiteBound bound =
            x3p::exact_chi3_bound(n, s, t, budget ? budget : x3p::default_scan_budget);
        report->bound_value = bound.value;
        std::copy(bound.partition.begin(), bound.partition.end(), report->bound_parts);

        std::optional<x3p::PartitionedGraph> built;
        try {
            std::vector<uint64_t> elems(a, a + len);
            built.emplace(x3p::build_williford(v, elems, c));
        } catch (const x3p::Error& e) {
            // a bad witness disproves nothing; report it instead of erroring
            set_reason(std::string("witness construction failed: ") + e.what());
            return;
        }
        x3p::PartitionedGraph& witness = *built;

        if (witness.vertex_count() > n) {
            set_reason("witness has " + std::to_string(witness.vertex_count()) +
                       " vertices, more than n = " + std::to_string(n));
            return;
        }
        witness.validate();

        x3p::FreenessResult fr = x3p::is_kst_free(witness, s, t);
        report->freeness_verified = fr.free ? 1 : 0;
        report->witness_edges = witness.edge_count();
        if (!fr.free) {
            set_reason("witness contains a forbidden subgraph");
            return;
        }
        if (report->witness_edges != report->bound_value) {
            set_reason("exact bound " + std::to_string(report->bound_value) +
                       " does not meet witness edges " + std::to_string(report->witness_edges));
            return;
        }
        report->certified = 1;
    });
}

} /* extern "C" */
