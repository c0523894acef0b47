#ifndef X3P_SIDON_HPP
#define X3P_SIDON_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "error.hpp"

namespace x3p {

// Set of distinct residues mod m whose nonzero pairwise differences are all
// distinct. Construction validates, so an instance is always a Sidon set.
struct SidonSet {
    uint64_t modulus = 0;
    std::vector<uint64_t> elements; // sorted ascending

    static SidonSet create(uint64_t modulus, std::vector<uint64_t> elements);
};

struct DifferenceSet {
    uint64_t modulus = 0;
    std::map<uint64_t, uint64_t> counts; // difference -> multiplicity, zero excluded
};

bool is_sidon(std::span<const uint64_t> elements, uint64_t modulus);

DifferenceSet difference_set(const SidonSet& a);

// Bose-Chowla set in Z_{q^2-1}: exponents a with theta^a - theta in GF(q),
// theta the primitive element of GF(q^2) chosen by build_field conventions.
// |A| = q and 1 is always a member. The element set depends on the choice of
// theta; every property used downstream (size, Sidon, difference structure)
// does not.
SidonSet bose_chowla(uint64_t q);

// A - A must equal Z_{q^2-1} minus the q-2 multiples i*(q+1), 1 <= i <= q-2.
bool check_bose_chowla_structure(uint64_t q, const SidonSet& a);

// h_elements must form a subgroup of Z_m (throws not_subgroup otherwise);
// true iff no nonzero member of H occurs as a difference of a.
bool disjoint_from_subgroup(const SidonSet& a, const std::vector<uint64_t>& h_elements);

} // namespace x3p

#endif
