#ifndef X3P_BOUNDS_HPP
#define X3P_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace x3p {

struct AsymptoticBound {
    double coefficient = 0.0;
    double exponent = 0.0;
};

// Leading coefficient (1/3)^(1-1/s) * ((t-1)/2)^(1/s) of the K_{s,t} upper
// bound for 3-partite hosts, with exponent 2 - 1/s. Requires 2 <= s <= t.
AsymptoticBound thm1_coefficient(uint64_t s, uint64_t t);

// Value of the relaxed edge-density optimum at part densities (d1, d2):
// ((t-1)/2)^(1/s) * (d1(1-d1) + d2(1-d2) - d1 d2)^(1-1/s).
// Requires d1, d2 >= 0 and d1 + d2 <= 1. Maximized at d1 = d2 = 1/3.
double lagrange_closed_form(uint64_t s, uint64_t t, double d1, double d2);

struct OracleResult {
    double value = 0.0;
    double delta1 = 0.0, delta2 = 0.0;
    std::array<double, 3> c{}; // c12, c13, c23 at the maximizer
};

// Numerical maximization of c12 + c13 + c23 over the density constraint,
// scanning interior grid points (d1, d2) = (i, j)/grid and solving each inner
// problem by projected ascent with seeded restarts. Shares no algebra with
// lagrange_closed_form; used to cross-check it. grid >= 100.
OracleResult lagrange_numeric_oracle(uint64_t s, uint64_t t, uint64_t grid, uint64_t restarts,
                                     uint64_t seed);

struct Thm4Coefficients {
    double k2t_upper = 0.0; // (1-1/k)^(1/2) * sqrt(t-1)/2, exponent 3/2
    double k2t_lower = 0.0; // (1-1/k)   * sqrt(t-1)/2
    double k33_upper = 0.0; // (1-1/k)^(2/3) / 2, exponent 5/3
    double k33_lower = 0.0; // (1-1/k)   / 2
};

// Coefficients for K_{2,t}-free and K_{3,3}-free graphs of chromatic number
// at most k. Requires t >= 2, k >= 2.
Thm4Coefficients thm4_coefficients(uint64_t t, uint64_t k);

struct ClassicalCoefficients {
    double ex_k2t = 0.0;         // sqrt(t-1)/2, the unrestricted K_{2,t} coefficient
    double ex_k2t_display = 0.0; // sqrt((t-1)/2), the same bound in its weaker printed form
    double chi2_k2t = 0.0;       // sqrt(t-1)/(2 sqrt(2)), bipartite hosts
};

// Known n^(3/2) coefficients for comparison. Only s = 2 is supported.
ClassicalCoefficients classical_coefficients(uint64_t s, uint64_t t);

// Zarankiewicz bound z(m,n,s,t) <= (s-t+1)^(1/t) n m^(1-1/t)
//   + (t-1) m^(2-2/t) + (t-2) n, valid for s >= t >= 2.
double nikiforov_bound(uint64_t m, uint64_t n, uint64_t s, uint64_t t);

// binomial coefficient, saturating at UINT64_MAX
uint64_t binom(uint64_t n, uint64_t k);

// Minimum of sum_i C(d_i, s) over m nonnegative integers with sum e, attained
// by the balanced sequence: e = Qm + r gives (m-r) C(Q,s) + r C(Q+1,s).
// Saturating; m = 0 with e > 0 yields UINT64_MAX (infeasible).
uint64_t minbinom(uint64_t m, uint64_t e, uint64_t s);

struct TripartiteBound {
    uint64_t value = 0;
    std::array<uint64_t, 3> partition{};
    std::array<uint64_t, 3> witness{}; // (e12, e13, e23), lexicographically smallest maximizer
};

inline constexpr uint64_t default_scan_budget = uint64_t(1) << 33;

// Largest e12 + e13 + e23 subject to, for each part i with others j and k,
// minbinom(n_j, e_ij, s) + minbinom(n_k, e_ik, s) <= (t-1) C(n_i, s) and the
// box caps e_ij <= n_i n_j. This dominates the edge count of every K_{s,t}-free
// tripartite graph with these part sizes. Throws budget_exceeded if the scan
// would exceed the given work budget instead of truncating.
TripartiteBound exact_tripartite_bound(uint64_t n1, uint64_t n2, uint64_t n3, uint64_t s,
                                       uint64_t t, uint64_t budget = default_scan_budget);

// Maximum of exact_tripartite_bound over all partitions n1 <= n2 <= n3 of n.
TripartiteBound exact_chi3_bound(uint64_t n, uint64_t s, uint64_t t,
                                 uint64_t budget = default_scan_budget);

struct BipartiteBound {
    uint64_t value = 0;
    std::array<uint64_t, 2> partition{};
};

// Two-part analogue: largest e with minbinom(n2, e, s) <= (t-1) C(n1, s) and
// minbinom(n1, e, s) <= (t-1) C(n2, s), maximized over n1 + n2 = n.
BipartiteBound exact_chi2_bound(uint64_t n, uint64_t s, uint64_t t);

struct GammaLowerBoundCheck {
    uint64_t n = 0;
    uint64_t edges = 0;
    bool ok = false; // edges >= sqrt(t/3) n^(3/2) - n, checked in integers
};

// The tripartite quotient graph on n = 3(q^2-1)/t vertices has 3q(q^2-1)/t
// edges, which equals n sqrt(nt/3 + 1); the check is exact via
// 3 (edges + n)^2 >= t n^3.
GammaLowerBoundCheck gamma_lower_bound_check(uint64_t q, uint64_t t);

} // namespace x3p

#endif
