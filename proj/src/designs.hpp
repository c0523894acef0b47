#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace x3p {

// kept unreduced so callers see the raw count over v-1
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;
};

struct DifferenceFamily {
    uint64_t v = 0;
    uint64_t lambda = 1;
    std::vector<std::vector<uint64_t>> blocks;
};

struct FamilyCheck {
    bool ok = false;
    // index = residue of Z_v, value = how often it occurs as an in-block difference
    std::vector<uint64_t> multiplicity;
};

// true iff every nonzero residue occurs exactly lambda times across all blocks
FamilyCheck verify_difference_family(const DifferenceFamily& f);

struct TranslatePair {
    uint64_t v = 0;
    std::vector<uint64_t> a; // sorted residues
    uint64_t c = 1;          // unit of Z_v; the second block is c*a

    static TranslatePair create(uint64_t v, std::vector<uint64_t> a, uint64_t c);
};

// true iff a is Sidon in Z_v and (a-a) meets (ca-ca) only in 0
bool williford_condition(const TranslatePair& p);

// |((a-a) u (ca-ca)) \ {0}| over v-1
Rational coverage_ratio(const TranslatePair& p);

// lexicographically smallest u*(a - a0) over units u and base points a0 in a;
// c is carried through unchanged
TranslatePair canonical_translate_form(const TranslatePair& p);

enum class SearchStatus { complete, budget_exceeded };

struct SearchOptions {
    bool require_full_coverage = true;
    double min_coverage = 0.0; // applies when full coverage is not required
    uint64_t budget = uint64_t(1) << 40; // DFS node limit
    uint64_t threads = 0;                // 0 = hardware concurrency
};

struct FoundPair {
    TranslatePair pair;
    Rational coverage;
};

struct SearchOutcome {
    std::vector<FoundPair> pairs;
    SearchStatus status = SearchStatus::complete;
    uint64_t nodes = 0;
};

// exhaustive DFS over canonical-form pairs (A, c); output sorted by (A, c)
SearchOutcome search_translate_pairs(uint64_t v, uint64_t k, const SearchOptions& opts = {});

} // namespace x3p
