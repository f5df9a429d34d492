#pragma once

#include <optional>

#include "series.hpp"

namespace pfg {

// Full subgroup enumeration stays exhaustive only at small orders.
inline constexpr uint64_t kSubgroupBound = 500;

// Every subgroup of g, by layered closure: cyclic subgroups first, then
// spans of (subgroup, extra element) pairs to a fixed point. Sorted by
// order, then by element list.
std::vector<Subgroup> all_subgroups(const Group& g);

// D normal in C <= ambient with C/D isomorphic to the target.
struct SectionWitness {
  Subgroup c;
  Subgroup d;
  std::optional<SimpleType> quotient_type; // set when the section is simple
};

// Exhaustive (C, D) sweep within kSubgroupBound; the first witness in the
// deterministic subgroup order, or nullopt when no section exists.
std::optional<SectionWitness> is_section(const Group& target, const Group& ambient);

// All simple types occurring as sections C/D, which are exactly the
// composition factors of subgroups. Sorted, deduplicated by type.
std::vector<SimpleType> simple_sections(const Group& ambient);

struct CoverageOutcome {
  bool pass = false;
  uint64_t covered = 0; // |{g0 s1 ... sm}| with o(g0) coprime to q, si q-th powers
  uint64_t order = 0;
  uint64_t q = 0;
  uint64_t m = 0;
};

// Brute-force product set of one coprime-order factor and m q-th powers;
// pass means it reaches the whole group.
CoverageOutcome power_word_coverage(const Group& g, uint64_t q, uint64_t m);

struct PerfectnessOutcome {
  bool pass = false;    // no abelian factor implies derived = whole group
  bool abelian_factor = false;
  bool perfect = false; // the converse is informational only: SL2(5) is
                        // perfect yet has a C2 factor
};

PerfectnessOutcome perfectness_check(const Group& g);

struct A5Outcome {
  bool pass = false;
  std::vector<SimpleType> sections;
};

// Requires every nonabelian composition factor of g to be A5; passes when
// the nonabelian simple sections are A5 as well.
A5Outcome a5_corollary_check(const Group& g);

} // namespace pfg
