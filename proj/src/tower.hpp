#pragma once

#include <optional>
#include <string>

#include "series.hpp"

namespace pfg {

// Annotation for the built-in infinite families. The prefix in hand is
// exact; eventual_kernel_factors is the rule for everything past it, and
// is what licenses Exact/Infinite multiplicities instead of AtLeast.
struct TowerFamily {
  std::string kind; // "zp" | "zhat" | "prod_simple" | "constant"
  std::vector<uint64_t> parameters;
  std::vector<std::string> part_labels; // prod_simple: cycled part types
  std::vector<SimpleType> eventual_kernel_factors;
  // zhat: every C_p recurs in later kernels, which no finite list captures.
  bool kernel_factors_all_primes = false;
};

// A finite prefix G_1 <- G_2 <- ... <- G_N of an inverse system. Levels and
// maps are immutable after construction; map i sends level i+1 onto level i.
// Construction checks only the shape (level/map counts); surjectivity, the
// order equation and the family rule are validate()'s job.
class Tower {
public:
  static Tower from_levels(std::vector<Group> levels, std::vector<Hom> maps,
                           std::optional<TowerFamily> family = std::nullopt);

  // Levels C_{p^n}, n = 1..prefix, with reduction maps.
  static Tower zp(uint64_t p, uint32_t prefix);
  // Levels C_{n!}, n = 1..prefix; level 1 is the trivial C_1.
  static Tower zhat(uint32_t prefix);
  // Level n = product of the first n parts, cycling through the given
  // simple-type labels; maps drop the last coordinate.
  static Tower prod_simple(const std::vector<std::string>& labels, uint32_t prefix);
  // The same group at every level, identity maps.
  static Tower constant(const Group& g, uint32_t prefix);

  size_t size() const;
  const Group& level(size_t i) const; // 0-based: level(0) = G_1
  const Hom& map(size_t i) const;     // level(i+1) -> level(i)
  const std::optional<TowerFamily>& family() const;

  // Same levels and maps, annotation dropped: multiplicities degrade to
  // AtLeast because nothing past the prefix is promised any more.
  Tower without_family() const;

  // The first `levels` levels with their maps; the annotation carries over
  // since the family rule is per-level. 1 <= levels <= size().
  Tower prefix(size_t levels) const;

  const void* rep_key() const;

private:
  struct Rep;
  explicit Tower(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// First violation wins; level is the 1-based index of the offending map
// (InvalidMap/NotSurjective) or level (FamilyMismatch).
struct TowerCheck {
  bool pass = true;
  std::string violation;
  size_t level = 0;
  std::string detail;
};

TowerCheck validate(const Tower& t);

// Multiplicity of a simple type among the composition factors of the limit.
// Exact/Infinite only when the family annotation licenses the answer;
// an unannotated prefix can only ever promise AtLeast.
struct Multiplicity {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::AtLeast;
  uint64_t count = 0;
  std::string label() const; // "Exact(3)" / "AtLeast(2)" / "Infinite"

  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.kind == b.kind && (a.kind == Kind::Infinite || a.count == b.count);
  }
};

struct ProfileEntry {
  SimpleType type;
  std::vector<uint64_t> trace; // n_S(G_1) .. n_S(G_N); nondecreasing
  Multiplicity mult;
};

// Entries sorted by type; one entry per simple type occurring in any level.
using FactorProfile = std::vector<ProfileEntry>;

FactorProfile profile(const Tower& t);

// Composition series of the limit realized blockwise: block 0 refines G_1,
// block n >= 1 refines ker(map n) re-rooted as a standalone group. The
// concatenation is the kernel-filtration refinement, order type <= omega.
struct InducedSeries {
  Tower tower;
  uint64_t seed = 0;
  std::vector<Series> blocks;
};

InducedSeries induced_series(const Tower& t, uint64_t seed);

// Factors of blocks 0..through_block; equals factor_multiset(G_{b+1}) by
// finite Jordan-Holder, which callers are expected to assert.
FactorMultiset accumulate(const InducedSeries& s, size_t through_block);

struct MatchOutcome {
  bool pass = true;
  size_t first_divergence = 0; // block index, meaningful when !pass
  std::string detail;
};

// Two independently seeded induced series must accumulate to the same
// multiset at every block boundary.
MatchOutcome match_series(const Tower& t, uint64_t seed_a, uint64_t seed_b);

// A closed subgroup of the limit, held as one subgroup per level with
// map(i)(H_{i+1}) = H_i verified at construction.
class ClosedSubgroup {
public:
  static ClosedSubgroup from_levels(Tower tower, std::vector<Subgroup> levels);

  const Tower& tower() const { return tower_; }
  size_t size() const { return levels_.size(); }
  const Subgroup& level(size_t i) const { return levels_[i]; }

private:
  ClosedSubgroup(Tower tower, std::vector<Subgroup> levels)
      : tower_(std::move(tower)), levels_(std::move(levels)) {}
  Tower tower_;
  std::vector<Subgroup> levels_;
};

struct IntersectOutcome {
  bool pass = false;
  FactorMultiset factors;     // of the deduplicated intersected chain
  uint64_t trivial_steps = 0; // steps the intersection collapsed
  uint64_t matched_steps = 0; // steps whose quotient matched the factor
  std::string detail;
};

// Realizes the series' full chain inside G_N, intersects it with H_N, and
// checks every consecutive quotient is trivial or of the same type as the
// corresponding series factor; the surviving chain is a composition series
// of H_N and its multiset is returned. Explicit and cyclic towers only.
IntersectOutcome intersect_series(const InducedSeries& s, const ClosedSubgroup& h);

// Every level solvable; exact for the prefix, and for the whole limit when
// the family annotation pins the remaining kernel factors.
bool prosolvable(const Tower& t);

// No abelian type anywhere in the profile over the prefix.
bool anabelian(const Tower& t);

} // namespace pfg
