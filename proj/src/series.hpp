#pragma once

#include <map>

#include "hom.hpp"
#include "simple_type.hpp"

namespace pfg {

// Above this order the full normal-subgroup lattice is skipped and maximal
// normal subgroups are found by probing through a quotient instead.
inline constexpr uint64_t kLatticeBound = 5000;

// All normal subgroups, as the join-closure of the spans of single
// conjugacy classes; sorted by order, then by element list. Explicit
// groups only up to kLatticeBound; cyclic groups answer by divisor
// arithmetic at any order.
std::vector<Subgroup> normal_subgroups(const Group& g);

struct SeriesStep {
  Subgroup subgroup;
  SimpleType factor; // type of predecessor / subgroup
};

// G = G_0 > G_1 > ... > G_k = 1, stored as steps G_1..G_k rooted in group.
// The seed breaks ties among maximal normal subgroups of equal order.
struct Series {
  Group group;
  std::vector<SeriesStep> steps;
};

Series composition_series(const Group& g, uint64_t seed);

using FactorMultiset = std::map<SimpleType, uint64_t>;

FactorMultiset factors_of(const Series& s);
FactorMultiset factor_multiset(const Group& g); // any seed gives the same multiset

// Multiplicity of s, matching by same_type.
uint64_t n_count(const FactorMultiset& m, const SimpleType& s);
uint64_t n_count(const Group& g, const SimpleType& s);

struct JhOutcome {
  uint64_t order = 0;
  FactorMultiset factors;  // common multiset (from the first trial)
  uint64_t chains_found = 0; // distinct subgroup chains seen
  bool pass = false;       // all trials produced the same multiset
};

// Runs trials series with seeds base_seed .. base_seed+trials-1.
JhOutcome jh_verify(const Group& g, uint64_t trials, uint64_t base_seed);

bool is_solvable(const Group& g);

// Prime orders of the cyclic factors along the seed-0 series;
// errc::not_solvable when a nonabelian factor shows up.
std::vector<uint64_t> radical_witness(const Group& g);

} // namespace pfg
