#include "sidon.hpp"

#include <algorithm>
#include <set>

#include "finite_field.hpp"

namespace x3p {

bool is_sidon(std::span<const uint64_t> elements, uint64_t modulus) {
    if (modulus == 0) fail(errc::invalid_argument, "modulus must be positive");
    for (uint64_t e : elements)
        if (e >= modulus) fail(errc::invalid_argument, "element " + std::to_string(e) + " not a residue mod " + std::to_string(modulus));
    std::vector<char> seen(modulus, 0);
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = 0; j < elements.size(); ++j) {
            if (i == j) continue;
            uint64_t d = (elements[i] + modulus - elements[j]) % modulus;
            if (d == 0) return false; // duplicate elements
            if (seen[d]) return false;
            seen[d] = 1;
        }
    }
    return true;
}

SidonSet SidonSet::create(uint64_t modulus, std::vector<uint64_t> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        fail(errc::not_sidon, "elements are not distinct");
    if (!is_sidon(elements, modulus)) fail(errc::not_sidon, "set has a repeated difference");
    return SidonSet{modulus, std::move(elements)};
}

DifferenceSet difference_set(const SidonSet& a) {
    DifferenceSet d;
    d.modulus = a.modulus;
    for (uint64_t x : a.elements)
        for (uint64_t y : a.elements)
            if (x != y) d.counts[(x + a.modulus - y) % a.modulus]++;
    return d;
}

namespace {

bool prime_power(uint64_t q, uint64_t& p, uint64_t& e) {
    if (q < 2) return false;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            e = 0;
            while (q % d == 0) {
                q /= d;
                ++e;
            }
            return q == 1;
        }
    }
    p = q;
    e = 1;
    return true;
}

} // namespace

SidonSet bose_chowla(uint64_t q) {
    uint64_t p = 0, e = 0;
    if (!prime_power(q, p, e)) fail(errc::non_prime, std::to_string(q) + " is not a prime power");
    Field f = build_field(p, 2 * e);
    FieldElement theta = f.primitive_element();

    const uint64_t m = q * q - 1;
    std::vector<uint64_t> a;
    a.reserve(q);
    FieldElement power = f.one(); // theta^0, advanced by one multiplication per step
    for (uint64_t i = 0; i < m; ++i) {
        if (in_subfield(power - theta, q)) a.push_back(i);
        power = power * theta;
    }
    if (a.size() != q) fail(errc::internal, "Bose-Chowla set has wrong size");
    return SidonSet::create(m, std::move(a));
}

bool check_bose_chowla_structure(uint64_t q, const SidonSet& a) {
    const uint64_t m = q * q - 1;
    if (a.modulus != m) return false;
    std::vector<char> attained(m, 0);
    attained[0] = 1;
    for (uint64_t x : a.elements)
        for (uint64_t y : a.elements)
            if (x != y) attained[(x + m - y) % m] = 1;
    std::vector<char> expected(m, 1);
    for (uint64_t i = 1; i + 1 < q; ++i) expected[i * (q + 1) % m] = 0;
    return attained == expected;
}

bool disjoint_from_subgroup(const SidonSet& a, const std::vector<uint64_t>& h_elements) {
    const uint64_t m = a.modulus;
    std::vector<char> in_h(m, 0);
    for (uint64_t h : h_elements) {
        if (h >= m) fail(errc::not_subgroup, "subgroup element out of range");
        if (in_h[h]) fail(errc::not_subgroup, "subgroup elements not distinct");
        in_h[h] = 1;
    }
    if (h_elements.empty() || !in_h[0]) fail(errc::not_subgroup, "subgroup must contain 0");
    for (uint64_t x : h_elements)
        for (uint64_t y : h_elements)
            if (!in_h[(x + y) % m]) fail(errc::not_subgroup, "set not closed under addition");

    for (uint64_t x : a.elements)
        for (uint64_t y : a.elements) {
            if (x == y) continue;
            uint64_t d = (x + m - y) % m;
            if (in_h[d]) return false;
        }
    return true;
}

} // namespace x3p
