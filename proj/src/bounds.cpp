#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace x3p {

AsymptoticBound thm1_coefficient(uint64_t s, uint64_t t) {
    if (s < 2 || t < s) fail(errc::invalid_argument, "requires 2 <= s <= t");
    double si = double(s);
    AsymptoticBound b;
    b.coefficient = std::pow(1.0 / 3.0, 1.0 - 1.0 / si) * std::pow((double(t) - 1.0) / 2.0, 1.0 / si);
    b.exponent = 2.0 - 1.0 / si;
    return b;
}

double lagrange_closed_form(uint64_t s, uint64_t t, double d1, double d2) {
    if (s < 2 || t < s) fail(errc::invalid_argument, "requires 2 <= s <= t");
    if (d1 < 0 || d2 < 0 || d1 + d2 > 1.0 + 1e-12)
        fail(errc::invalid_argument, "densities must be nonnegative with sum at most 1");
    double expr = d1 * (1.0 - d1) + d2 * (1.0 - d2) - d1 * d2;
    if (expr <= 0) return 0.0;
    double si = double(s);
    return std::pow((double(t) - 1.0) / 2.0, 1.0 / si) * std::pow(expr, 1.0 - 1.0 / si);
}

namespace {

// maximize c1+c2+c3 subject to sum alpha_i c_i^s <= cap, 0 <= c_i <= 1.
// Ray projection onto the constraint surface has a closed form because the
// constraint is monotone in each coordinate; a final cap pass per coordinate
// lands exactly on the boundary.
double inner_max(const std::array<double, 3>& alpha, double cap, double s, uint64_t restarts,
                 std::mt19937_64& rng, std::array<double, 3>& arg) {
    auto constraint = [&](const std::array<double, 3>& c) {
        return alpha[0] * std::pow(c[0], s) + alpha[1] * std::pow(c[1], s) +
               alpha[2] * std::pow(c[2], s);
    };
    auto uniform = [&]() { return double(rng() >> 11) * 0x1.0p-53; };

    double best = 0.0;
    std::array<double, 3> bestc{};
    for (uint64_t r = 0; r < std::max<uint64_t>(restarts, 1); ++r) {
        std::array<double, 3> c{uniform(), uniform(), uniform()};
        double g = constraint(c);
        if (g > cap) {
            double rho = std::pow(cap / g, 1.0 / s);
            for (double& x : c) x *= rho;
        }
        double eta = 0.25;
        for (int it = 0; it < 300; ++it) {
            for (double& x : c) x = std::min(1.0, x + eta);
            double val = constraint(c);
            if (val > cap) {
                double rho = std::pow(cap / val, 1.0 / s);
                for (double& x : c) x *= rho;
            }
            eta *= 0.96;
        }
        for (int pass = 0; pass < 4; ++pass) {
            for (int i = 0; i < 3; ++i) {
                double others = 0.0;
                for (int j = 0; j < 3; ++j)
                    if (j != i) others += alpha[j] * std::pow(c[j], s);
                double room = cap - others;
                c[i] = room <= 0 ? 0.0 : std::min(1.0, std::pow(room / alpha[i], 1.0 / s));
            }
        }
        double total = c[0] + c[1] + c[2];
        if (total > best) {
            best = total;
            bestc = c;
        }
    }
    arg = bestc;
    return best;
}

} // namespace

OracleResult lagrange_numeric_oracle(uint64_t s, uint64_t t, uint64_t grid, uint64_t restarts,
                                     uint64_t seed) {
    if (s < 2 || t < s) fail(errc::invalid_argument, "requires 2 <= s <= t");
    if (grid < 100) fail(errc::invalid_argument, "grid resolution must be at least 100");
    std::mt19937_64 rng(seed);
    const double si = double(s);
    OracleResult best;
    best.value = -1.0;
    // densities are kept strictly positive: with a zero part the constraint
    // degenerates and no longer models a 3-partite host
    for (uint64_t i = 1; i + 1 < grid; ++i) {
        for (uint64_t j = 1; i + j < grid; ++j) {
            double d1 = double(i) / double(grid);
            double d2 = double(j) / double(grid);
            double d3 = 1.0 - d1 - d2;
            std::array<double, 3> alpha = {std::pow(d3, si - 1.0), std::pow(d2, si - 1.0),
                                           std::pow(d1, si - 1.0)};
            double cap = (double(t) - 1.0) / 2.0 * std::pow(d1 * d2 * d3, si - 1.0);
            std::array<double, 3> c{};
            double val = inner_max(alpha, cap, si, restarts, rng, c);
            if (val > best.value) {
                best.value = val;
                best.delta1 = d1;
                best.delta2 = d2;
                best.c = c;
            }
        }
    }
    return best;
}

Thm4Coefficients thm4_coefficients(uint64_t t, uint64_t k) {
    if (t < 2 || k < 2) fail(errc::invalid_argument, "requires t >= 2 and k >= 2");
    double shrink = 1.0 - 1.0 / double(k);
    Thm4Coefficients c;
    c.k2t_upper = std::pow(shrink, 0.5) * std::sqrt(double(t) - 1.0) / 2.0;
    c.k2t_lower = shrink * std::sqrt(double(t) - 1.0) / 2.0;
    c.k33_upper = std::pow(shrink, 2.0 / 3.0) / 2.0;
    c.k33_lower = shrink / 2.0;
    return c;
}

ClassicalCoefficients classical_coefficients(uint64_t s, uint64_t t) {
    if (s != 2) fail(errc::invalid_argument, "classical coefficients cover s = 2 only");
    if (t < 2) fail(errc::invalid_argument, "requires t >= 2");
    ClassicalCoefficients c;
    c.ex_k2t = std::sqrt(double(t) - 1.0) / 2.0;
    c.ex_k2t_display = std::sqrt((double(t) - 1.0) / 2.0);
    c.chi2_k2t = std::sqrt(double(t) - 1.0) / (2.0 * std::sqrt(2.0));
    return c;
}

double nikiforov_bound(uint64_t m, uint64_t n, uint64_t s, uint64_t t) {
    if (t < 2 || s < t) fail(errc::invalid_argument, "requires s >= t >= 2");
    double md = double(m), nd = double(n), td = double(t);
    return std::pow(double(s - t + 1), 1.0 / td) * nd * std::pow(md, 1.0 - 1.0 / td) +
           (td - 1.0) * std::pow(md, 2.0 - 2.0 / td) + (td - 2.0) * nd;
}

uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(r);
}

uint64_t minbinom(uint64_t m, uint64_t e, uint64_t s) {
    if (e == 0) return 0;
    if (m == 0) return UINT64_MAX;
    uint64_t q = e / m, r = e % m;
    uint64_t low = binom(q, s), high = binom(q + 1, s);
    unsigned __int128 total = (unsigned __int128)(m - r) * low + (unsigned __int128)r * high;
    return total > UINT64_MAX ? UINT64_MAX : uint64_t(total);
}

namespace {

uint64_t sat_mul(uint64_t a, uint64_t b) {
    unsigned __int128 p = (unsigned __int128)a * b;
    return p > UINT64_MAX ? UINT64_MAX : uint64_t(p);
}

// largest e <= box with minbinom(m, e, s) <= rhs; minbinom is nondecreasing in e
uint64_t minbinom_cap(uint64_t m, uint64_t s, uint64_t rhs, uint64_t box) {
    uint64_t lo = 0, hi = box;
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo + 1) / 2;
        if (minbinom(m, mid, s) <= rhs)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

constexpr uint64_t max_part_size = 100000;

} // namespace

TripartiteBound exact_tripartite_bound(uint64_t n1, uint64_t n2, uint64_t n3, uint64_t s,
                                       uint64_t t, uint64_t budget) {
    if (s < 1 || t < 1) fail(errc::invalid_argument, "s and t must be positive");
    if (n1 > max_part_size || n2 > max_part_size || n3 > max_part_size)
        fail(errc::invalid_argument, "part size exceeds cap of 100000");
    TripartiteBound out;
    out.partition = {n1, n2, n3};
    const uint64_t rhs1 = sat_mul(t - 1, binom(n1, s));
    const uint64_t rhs2 = sat_mul(t - 1, binom(n2, s));
    const uint64_t rhs3 = sat_mul(t - 1, binom(n3, s));

    // per-variable caps: each e_ij is limited by its complete-bipartite box and
    // by the two counting constraints it appears in
    const uint64_t cap12 =
        std::min(minbinom_cap(n2, s, rhs1, n1 * n2), minbinom_cap(n1, s, rhs2, n1 * n2));
    const uint64_t cap13 =
        std::min(minbinom_cap(n3, s, rhs1, n1 * n3), minbinom_cap(n1, s, rhs3, n1 * n3));
    const uint64_t cap23 =
        std::min(minbinom_cap(n3, s, rhs2, n2 * n3), minbinom_cap(n2, s, rhs3, n2 * n3));

    unsigned __int128 work =
        (unsigned __int128)(cap12 + 1) * (cap13 + 1) + 2 * (cap13 + 1) + (cap23 + 1);
    if (work > budget)
        fail(errc::budget_exceeded, "tripartite scan needs " + std::to_string(double(work)) +
                                        " steps, over the budget of " + std::to_string(budget));

    // room in the part-3 constraint depends on e13 alone, so the largest e23 it
    // allows can be tabulated once with a descending pointer
    std::vector<uint64_t> mb13_n3(cap13 + 1);
    std::vector<uint64_t> cap23_by_e13(cap13 + 1);
    {
        uint64_t ptr = cap23;
        for (uint64_t e13 = 0; e13 <= cap13; ++e13) {
            mb13_n3[e13] = minbinom(n3, e13, s);
            uint64_t room3 = rhs3 - minbinom(n1, e13, s); // nonnegative by cap13
            while (ptr > 0 && minbinom(n2, ptr, s) > room3) --ptr;
            cap23_by_e13[e13] = ptr;
        }
    }

    bool found = false;
    for (uint64_t e12 = 0; e12 <= cap12; ++e12) {
        const uint64_t room1 = rhs1 - minbinom(n2, e12, s); // nonnegative by cap12
        const uint64_t room2 = rhs2 - minbinom(n1, e12, s);
        // largest e13 the part-1 constraint still allows
        uint64_t e13max =
            uint64_t(std::upper_bound(mb13_n3.begin(), mb13_n3.end(), room1) - mb13_n3.begin()) - 1;
        // largest e23 the part-2 constraint still allows
        const uint64_t cap23_from_2 = minbinom_cap(n3, s, room2, cap23);
        for (uint64_t e13 = 0; e13 <= e13max; ++e13) {
            uint64_t e23 = std::min(cap23_from_2, cap23_by_e13[e13]);
            uint64_t total = e12 + e13 + e23;
            if (!found || total > out.value) {
                found = true;
                out.value = total;
                out.witness = {e12, e13, e23};
            }
        }
    }
    return out;
}

TripartiteBound exact_chi3_bound(uint64_t n, uint64_t s, uint64_t t, uint64_t budget) {
    TripartiteBound best;
    bool found = false;
    for (uint64_t n1 = 0; n1 <= n / 3; ++n1) {
        for (uint64_t n2 = n1; n2 <= (n - n1) / 2; ++n2) {
            uint64_t n3 = n - n1 - n2;
            TripartiteBound b = exact_tripartite_bound(n1, n2, n3, s, t, budget);
            if (!found || b.value > best.value) {
                found = true;
                best = b;
            }
        }
    }
    if (!found) fail(errc::invalid_argument, "no partition of " + std::to_string(n));
    return best;
}

BipartiteBound exact_chi2_bound(uint64_t n, uint64_t s, uint64_t t) {
    if (s < 1 || t < 1) fail(errc::invalid_argument, "s and t must be positive");
    if (n > 2 * max_part_size) fail(errc::invalid_argument, "n exceeds cap of 200000");
    BipartiteBound best;
    bool found = false;
    for (uint64_t n1 = 0; n1 <= n / 2; ++n1) {
        uint64_t n2 = n - n1;
        uint64_t rhs1 = sat_mul(t - 1, binom(n1, s));
        uint64_t rhs2 = sat_mul(t - 1, binom(n2, s));
        uint64_t lo = 0, hi = n1 * n2;
        while (lo < hi) {
            uint64_t mid = lo + (hi - lo + 1) / 2;
            if (minbinom(n2, mid, s) <= rhs1 && minbinom(n1, mid, s) <= rhs2)
                lo = mid;
            else
                hi = mid - 1;
        }
        if (!found || lo > best.value) {
            found = true;
            best.value = lo;
            best.partition = {n1, n2};
        }
    }
    return best;
}

GammaLowerBoundCheck gamma_lower_bound_check(uint64_t q, uint64_t t) {
    if (t == 0 || q < 2 || (q - 1) % t != 0)
        fail(errc::divisibility, "t must divide q - 1");
    if (q > 1000000) fail(errc::order_too_large, "q exceeds cap of 1000000");
    GammaLowerBoundCheck c;
    c.n = 3 * (q * q - 1) / t;
    c.edges = 3 * q * (q * q - 1) / t;
    // edges >= sqrt(t/3) n^(3/2) - n  <=>  3 (edges + n)^2 >= t n^3
    unsigned __int128 lhs = (unsigned __int128)(c.edges + c.n) * (c.edges + c.n) * 3;
    unsigned __int128 rhs = (unsigned __int128)c.n * c.n * c.n * t;
    c.ok = lhs >= rhs;
    return c;
}

} // namespace x3p
