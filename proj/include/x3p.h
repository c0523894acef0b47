#ifndef X3P_H
#define X3P_H

/* C interface to the x3p library: K_{s,t}-free multipartite graph
 * constructions over Z_m, structural verification, extremal edge bounds, and
 * translate-pair difference-family search.
 *
 * Every function returns X3P_OK on success. On failure the return value names
 * the error class and x3p_last_error() returns a message for the calling
 * thread. Output parameters are written only on success unless noted. Handles
 * returned through x3p_graph** / x3p_search_result** must be released with the
 * matching _free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum x3p_status {
    X3P_OK = 0,
    X3P_E_INVALID_ARGUMENT,
    X3P_E_NON_PRIME,
    X3P_E_ORDER_TOO_LARGE,
    X3P_E_MIXED_FIELDS,
    X3P_E_BAD_SUBFIELD_ORDER,
    X3P_E_DIVISIBILITY,
    X3P_E_NOT_SUBGROUP,
    X3P_E_NOT_UNIT,
    X3P_E_NOT_SIDON,
    X3P_E_DIFFERENCE_OVERLAP,
    X3P_E_PRECONDITION,
    X3P_E_PARSE,
    X3P_E_IO,
    X3P_E_BUDGET_EXCEEDED,
    X3P_E_INTERNAL
} x3p_status;

const char* x3p_version(void);

/* message for the last failing call on this thread; empty string if none */
const char* x3p_last_error(void);

typedef struct x3p_graph x3p_graph;
typedef struct x3p_search_result x3p_search_result;

void x3p_graph_free(x3p_graph* g);
void x3p_search_result_free(x3p_search_result* r);

/* ---- Sidon sets ------------------------------------------------------- */

/* Bose-Chowla set in Z_{q^2-1} for a prime power q; writes q elements in
 * ascending order and the modulus q^2-1. */
x3p_status x3p_bose_chowla(uint64_t q, uint64_t* elements, uint64_t* modulus);

x3p_status x3p_is_sidon(const uint64_t* elements, size_t len, uint64_t modulus, int* ok);

/* true iff A - A equals Z_{q^2-1} minus the multiples i*(q+1), 1 <= i <= q-2 */
x3p_status x3p_check_bose_chowla_structure(uint64_t q, int* ok);

/* ---- graph constructions ---------------------------------------------- */

/* bipartite coset quotient, q-regular, K_{2,t+1}-free; requires t | q-1 */
x3p_status x3p_build_g_qt(uint64_t q, uint64_t t, x3p_graph** out);

/* tripartite coset quotient, 2q-regular, K_{2,2t+1}-free; requires t | q-1 */
x3p_status x3p_build_gamma_qt(uint64_t q, uint64_t t, x3p_graph** out);

/* single-part sum quotient of the Bose-Chowla set of q by the subgroup of
 * Z_{q^2-1} generated by `generator`; loops are discarded and counted */
x3p_status x3p_build_sum_quotient(uint64_t q, uint64_t generator, x3p_graph** out);

/* tripartite translate graph on Z_v from a Sidon set a (len elements) and a
 * unit c with (a-a) and (ca-ca) meeting only in 0; 2*len-regular, C4-free */
x3p_status x3p_build_williford(uint64_t v, const uint64_t* a, size_t len, uint64_t c,
                               x3p_graph** out);

/* seeded random assignment of vertices to k classes; intra-class edges are
 * dropped, classes become the parts of the result */
x3p_status x3p_random_partition_prune(const x3p_graph* g, uint64_t k, uint64_t seed,
                                      x3p_graph** out);

/* ---- graph queries ----------------------------------------------------- */

uint64_t x3p_graph_vertex_count(const x3p_graph* g);
uint64_t x3p_graph_part_count(const x3p_graph* g);
uint64_t x3p_graph_part_size(const x3p_graph* g, uint64_t part);
uint64_t x3p_graph_edge_count(const x3p_graph* g);
uint64_t x3p_graph_degree_min(const x3p_graph* g);
uint64_t x3p_graph_degree_max(const x3p_graph* g);
uint64_t x3p_graph_loops_discarded(const x3p_graph* g);

/* edges between parts i and j (0-based); 0 when i == j or out of range */
uint64_t x3p_graph_pair_edges(const x3p_graph* g, uint64_t i, uint64_t j);

/* 1 if the edge is present, 0 otherwise (0 on any invalid input) */
int x3p_graph_has_edge(const x3p_graph* g, uint64_t u, uint64_t v);

/* pointers remain valid while the graph handle lives */
const char* x3p_graph_construction(const x3p_graph* g);
const char* x3p_graph_vertex_label(const x3p_graph* g, uint64_t v);

/* largest number of common neighbours over all s-subsets, 1 <= s <= 4;
 * witness (s entries) receives the lexicographically smallest maximizer and
 * may be NULL */
x3p_status x3p_max_common_degree(const x3p_graph* g, uint64_t s, uint64_t* value,
                                 uint64_t* witness);

/* verified = 1 iff the graph has no K_{s,t} subgraph. When verified = 0,
 * witness_s (min(s,t) entries) and witness_t (max(s,t) entries) receive the
 * two sides of an embedded copy; either buffer may be NULL. */
x3p_status x3p_is_kst_free(const x3p_graph* g, uint64_t s, uint64_t t, int* verified,
                           uint64_t* witness_s, uint64_t* witness_t);

/* ---- x3p-graph v1 files ------------------------------------------------ */

x3p_status x3p_graph_write_file(const x3p_graph* g, const char* path);

/* parses, validates all structural invariants, reports line numbers on error */
x3p_status x3p_graph_read_file(const char* path, x3p_graph** out);

/* ---- bounds ------------------------------------------------------------ */

/* leading coefficient and exponent of the tripartite K_{s,t} upper bound */
x3p_status x3p_thm1_coefficient(uint64_t s, uint64_t t, double* coefficient, double* exponent);

/* closed-form objective value at part densities (d1, d2) */
x3p_status x3p_lagrange_closed_form(uint64_t s, uint64_t t, double d1, double d2, double* value);

/* independent grid + ascent maximization of the same objective; reports the
 * best value and its densities. grid >= 100; restarts per grid point >= 1. */
x3p_status x3p_lagrange_numeric_oracle(uint64_t s, uint64_t t, uint64_t grid, uint64_t restarts,
                                       uint64_t seed, double* value, double* d1, double* d2);

/* k-partite upper/lower coefficient pairs for K_{2,t} and K_{3,3} hosts */
x3p_status x3p_thm4_coefficients(uint64_t t, uint64_t k, double* k2t_upper, double* k2t_lower,
                                 double* k33_upper, double* k33_lower);

/* unrestricted-host coefficients for K_{2,t}, s = 2 only; the two ex forms
 * are the sqrt(t-1)/2 and sqrt((t-1)/2) displays */
x3p_status x3p_classical_coefficients(uint64_t s, uint64_t t, double* ex_k2t,
                                      double* ex_k2t_display, double* chi2_k2t);

/* bipartite K_{s,t} host bound (s >= t >= 2) for an m x n host */
x3p_status x3p_nikiforov_bound(uint64_t m, uint64_t n, uint64_t s, uint64_t t, double* value);

/* binomial coefficient, saturating at UINT64_MAX */
x3p_status x3p_binom(uint64_t n, uint64_t k, uint64_t* value);

/* minimum of sum-of-binomials C(deg_i, s) over degree sequences on m vertices
 * with e total; the balanced sequence attains it */
x3p_status x3p_minbinom(uint64_t m, uint64_t e, uint64_t s, uint64_t* value);

/* exact maximum of e12+e13+e23 for a K_{s,t}-free tripartite graph with the
 * given part sizes; witness_e (3 entries, optional) receives the maximizing
 * pair counts. budget = 0 means the default scan budget. */
x3p_status x3p_exact_tripartite_bound(uint64_t n1, uint64_t n2, uint64_t n3, uint64_t s,
                                      uint64_t t, uint64_t budget, uint64_t* value,
                                      uint64_t* witness_e);

/* maximum of the tripartite bound over all 3-part splits of n; parts (3) and
 * witness_e (3) are optional output buffers */
x3p_status x3p_exact_chi3_bound(uint64_t n, uint64_t s, uint64_t t, uint64_t budget,
                                uint64_t* value, uint64_t* parts, uint64_t* witness_e);

/* same for 2-part splits; parts takes 2 entries */
x3p_status x3p_exact_chi2_bound(uint64_t n, uint64_t s, uint64_t t, uint64_t* value,
                                uint64_t* parts);

/* integer-exact check that the tripartite construction for (q, t) meets its
 * guaranteed edge count: 3*(edges+n)^2 >= t*n^3 */
x3p_status x3p_gamma_lower_bound_check(uint64_t q, uint64_t t, int* ok, uint64_t* n,
                                       uint64_t* edges);

/* ---- difference families ----------------------------------------------- */

/* blocks are flattened into elems; block_lens holds nblocks lengths.
 * ok = 1 iff every nonzero residue occurs exactly lambda times. */
x3p_status x3p_verify_difference_family(uint64_t v, uint64_t lambda, const uint64_t* elems,
                                        const size_t* block_lens, size_t nblocks, int* ok);

/* ok = 1 iff a is Sidon mod v and (a-a) meets (ca-ca) only in 0 */
x3p_status x3p_williford_condition(uint64_t v, const uint64_t* a, size_t len, uint64_t c,
                                   int* ok);

/* |((a-a) u (ca-ca)) \ {0}| as num over den = v-1, unreduced */
x3p_status x3p_coverage_ratio(uint64_t v, const uint64_t* a, size_t len, uint64_t c,
                              uint64_t* num, uint64_t* den);

/* smallest sorted image of a under x -> u*(x - a0) over units u, a0 in a */
x3p_status x3p_canonical_translate_form(uint64_t v, const uint64_t* a, size_t len,
                                        uint64_t* out);

/* exhaustive search for canonical pairs (A, c) with |A| = k. When
 * require_full_coverage is 0, min_coverage filters by coverage ratio.
 * budget = 0 means the default node budget; threads = 0 means one worker per
 * hardware thread. A budget overrun is reported through the result status,
 * not as an error. */
x3p_status x3p_search_translate_pairs(uint64_t v, uint64_t k, int require_full_coverage,
                                      double min_coverage, uint64_t budget, uint64_t threads,
                                      x3p_search_result** out);

uint64_t x3p_search_result_count(const x3p_search_result* r);
int x3p_search_result_complete(const x3p_search_result* r); /* 0 = budget exceeded */
uint64_t x3p_search_result_nodes(const x3p_search_result* r);

/* a receives k entries; any output pointer may be NULL */
x3p_status x3p_search_result_pair(const x3p_search_result* r, uint64_t index, uint64_t* a,
                                  uint64_t* c, uint64_t* coverage_num, uint64_t* coverage_den);

/* ---- equality certification ------------------------------------------- */

typedef struct x3p_certify_report {
    int certified;          /* 1 iff every check below passed and values match */
    int freeness_verified;  /* witness graph is K_{s,t}-free */
    uint64_t witness_edges; /* edges of the constructed witness graph */
    uint64_t bound_value;   /* exact 3-part upper bound at n */
    uint64_t bound_parts[3];
    char reason[256]; /* empty when certified, else the first failure */
} x3p_certify_report;

/* builds the translate graph for (v, a, c), checks it is 3-partite and
 * K_{s,t}-free with 3v <= n vertices, computes the exact chi<=3 bound for n,
 * and certifies equality iff the witness edge count meets the bound */
x3p_status x3p_certify_equality(uint64_t n, uint64_t s, uint64_t t, uint64_t v,
                                const uint64_t* a, size_t len, uint64_t c, uint64_t budget,
                                x3p_certify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* X3P_H */
