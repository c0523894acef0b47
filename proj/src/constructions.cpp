#include "constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace x3p {

QuotientSpec subgroup_generated(uint64_t m, uint64_t g) {
    if (m == 0) fail(errc::invalid_argument, "modulus must be positive");
    if (m > (uint64_t(1) << 31)) fail(errc::order_too_large, "modulus exceeds 2^31");
    if (g >= m && g != 0) g %= m;
    QuotientSpec spec;
    spec.m = m;
    spec.generator = g;
    uint64_t d = g == 0 ? m : std::gcd(m, g);
    for (uint64_t x = 0; x < m; x += d) spec.h_elements.push_back(x);
    for (uint64_t r = 0; r < d; ++r) spec.coset_reps.push_back(r);
    return spec;
}

namespace {

std::string join_params(const SidonSet& a) {
    std::string s;
    for (uint64_t x : a.elements) {
        if (!s.empty()) s += ",";
        s += std::to_string(x);
    }
    return s;
}

// residues of A mod the coset count; distinct whenever (A-A) ^ H = {0}
std::vector<uint64_t> quotient_image(const SidonSet& a, const QuotientSpec& h) {
    std::vector<uint64_t> image;
    std::set<uint64_t> seen;
    for (uint64_t x : a.elements) {
        uint64_t r = h.coset_index(x);
        if (!seen.insert(r).second)
            fail(errc::precondition, "two elements of A fall in the same coset");
        image.push_back(r);
    }
    std::sort(image.begin(), image.end());
    return image;
}

} // namespace

PartitionedGraph build_g_qt(uint64_t q, uint64_t t) {
    if (t == 0 || (q - 1) % t != 0)
        fail(errc::divisibility, "t = " + std::to_string(t) + " does not divide q - 1");
    SidonSet a = bose_chowla(q);
    const uint64_t m = q * q - 1;
    QuotientSpec h = subgroup_generated(m, (q - 1) / t * (q + 1));
    if (!disjoint_from_subgroup(a, h.h_elements))
        fail(errc::internal, "difference set meets the subgroup");
    const uint64_t d = h.coset_count();
    auto image = quotient_image(a, h);

    GraphMetadata meta;
    meta.construction = "g_qt q=" + std::to_string(q) + " t=" + std::to_string(t);
    PartitionedGraph g({d, d}, meta);
    for (uint64_t i = 0; i < d; ++i) {
        g.set_label(i, "X+" + std::to_string(i));
        g.set_label(d + i, "Y+" + std::to_string(i));
    }
    for (uint64_t i = 0; i < d; ++i)
        for (uint64_t r : image) g.add_edge(i, d + (i + r) % d);
    return g;
}

PartitionedGraph build_gamma_qt(uint64_t q, uint64_t t) {
    if (t == 0 || (q - 1) % t != 0)
        fail(errc::divisibility, "t = " + std::to_string(t) + " does not divide q - 1");
    SidonSet a = bose_chowla(q);
    const uint64_t m = q * q - 1;
    QuotientSpec h = subgroup_generated(m, (q - 1) / t * (q + 1));
    if (!disjoint_from_subgroup(a, h.h_elements))
        fail(errc::internal, "difference set meets the subgroup");
    const uint64_t d = h.coset_count();
    auto image = quotient_image(a, h);

    GraphMetadata meta;
    meta.construction = "gamma_qt q=" + std::to_string(q) + " t=" + std::to_string(t);
    PartitionedGraph g({d, d, d}, meta);
    const char* names[3] = {"X", "Y", "Z"};
    for (uint64_t p = 0; p < 3; ++p)
        for (uint64_t i = 0; i < d; ++i)
            g.set_label(p * d + i, std::string(names[p]) + "+" + std::to_string(i));
    for (uint64_t p = 0; p < 3; ++p) {
        uint64_t from = p * d, to = (p + 1) % 3 * d;
        for (uint64_t i = 0; i < d; ++i)
            for (uint64_t r : image) g.add_edge(from + i, to + (i + r) % d);
    }
    return g;
}

PartitionedGraph build_sum_quotient(uint64_t m, const QuotientSpec& h, const SidonSet& a) {
    if (h.m != m || a.modulus != m)
        fail(errc::precondition, "modulus mismatch between A and H");
    if (!disjoint_from_subgroup(a, h.h_elements))
        fail(errc::precondition, "a nonzero difference of A lies in H");
    const uint64_t d = h.coset_count();
    auto image = quotient_image(a, h);
    std::vector<char> in_image(d, 0);
    for (uint64_t r : image) in_image[r] = 1;

    GraphMetadata meta;
    meta.construction = "sum_quotient m=" + std::to_string(m) +
                        " h=" + std::to_string(h.generator) + " A=" + join_params(a);
    PartitionedGraph g({d}, meta);
    for (uint64_t i = 0; i < d; ++i) g.set_label(i, "C+" + std::to_string(i));
    uint64_t loops = 0;
    for (uint64_t x = 0; x < d; ++x)
        for (uint64_t y = x; y < d; ++y) {
            if (!in_image[(x + y) % d]) continue;
            if (x == y)
                ++loops;
            else
                g.add_edge(x, y);
        }
    g.metadata().loops_discarded = loops;
    return g;
}

PartitionedGraph build_williford(uint64_t v, const std::vector<uint64_t>& a, uint64_t c) {
    if (v == 0) fail(errc::invalid_argument, "modulus must be positive");
    if (v > PartitionedGraph::max_vertices / 3)
        fail(errc::invalid_argument, "modulus too large for the vertex cap");
    c %= v;
    if (std::gcd(c, v) != 1) fail(errc::not_unit, "c must be a unit mod v");
    for (uint64_t x : a)
        if (x >= v) fail(errc::invalid_argument, "element of A out of range");
    if (!is_sidon(a, v)) fail(errc::not_sidon, "A is not a Sidon set");

    std::vector<char> in_a(v, 0), in_b(v, 0), diff_a(v, 0);
    for (uint64_t x : a) in_a[x] = 1;
    for (uint64_t x : a) in_b[x * c % v] = 1;
    for (uint64_t x : a)
        for (uint64_t y : a)
            if (x != y) diff_a[(x + v - y) % v] = 1;
    for (uint64_t x : a)
        for (uint64_t y : a)
            if (x != y && diff_a[(x + v - y) % v * c % v])
                fail(errc::difference_overlap, "A - A and cA - cA share a nonzero difference");

    GraphMetadata meta;
    SidonSet as = SidonSet::create(v, a);
    meta.construction = "williford v=" + std::to_string(v) + " c=" + std::to_string(c) +
                        " A=" + join_params(as);
    PartitionedGraph g({v, v, v}, meta);
    for (uint64_t i = 0; i < v; ++i) {
        g.set_label(i, "r" + std::to_string(i));
        g.set_label(v + i, "A+" + std::to_string(i));
        g.set_label(2 * v + i, "B+" + std::to_string(i));
    }
    for (uint64_t x = 0; x < v; ++x)
        for (uint64_t j = 0; j < v; ++j) {
            if (in_a[(x + v - j) % v]) g.add_edge(x, v + j);     // x in A + j
            if (in_b[(x + v - j) % v]) g.add_edge(x, 2 * v + j); // x in B + j
        }
    for (uint64_t j = 0; j < v; ++j)
        for (uint64_t i = 0; i < v; ++i)
            if (in_a[(i + v - c * j % v) % v]) g.add_edge(v + j, 2 * v + i);
    return g;
}

PartitionedGraph random_k_partition_prune(const PartitionedGraph& g, uint64_t k, uint64_t seed) {
    if (k == 0) fail(errc::invalid_argument, "class count must be positive");
    const uint64_t n = g.vertex_count();
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> cls(n);
    for (uint64_t v = 0; v < n; ++v) cls[v] = rng() % k;

    std::vector<uint64_t> sizes(k, 0);
    for (uint64_t c : cls) sizes[c]++;
    // stable relabelling: class-major, original index within a class
    std::vector<uint64_t> offset(k, 0);
    for (uint64_t c = 1; c < k; ++c) offset[c] = offset[c - 1] + sizes[c - 1];
    std::vector<uint64_t> newpos(n);
    {
        std::vector<uint64_t> cursor = offset;
        for (uint64_t v = 0; v < n; ++v) newpos[v] = cursor[cls[v]]++;
    }

    GraphMetadata meta;
    meta.construction = "prune k=" + std::to_string(k) + " seed=" + std::to_string(seed) +
                        (g.metadata().construction.empty() ? "" : " of " + g.metadata().construction);
    PartitionedGraph out(sizes, meta);
    for (uint64_t v = 0; v < n; ++v)
        out.set_label(newpos[v], g.label(v).empty() ? "o" + std::to_string(v) : g.label(v));
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = g.row(u).find_next(u); v != Bitset::npos; v = g.row(u).find_next(v))
            if (cls[u] != cls[v]) out.add_edge(newpos[u], newpos[v]);
    return out;
}

} // namespace x3p
