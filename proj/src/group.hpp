#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "perm.hpp"

namespace pfg {

// BFS closure cap: groups above this order are never enumerated.
inline constexpr uint64_t kMaxOrder = 100000;
// Additional cap on order * degree for materializing structural groups,
// so towers can carry levels like C_15625 without ever holding their
// element sets.
inline constexpr uint64_t kMaxCells = 100000000;

// Explicit groups hold generators and (lazily) their full element set.
// Cyclic and Product are structural: order, factors and series come from
// arithmetic, and the element set exists only if materialize() is legal.
enum class Flavor { Explicit, Cyclic, Product };

class Group {
public:
  static Group from_generators(Point degree, std::vector<Perm> generators);
  // Element set already known (subgroup re-rooting); must be closed.
  static Group from_elements(Point degree, std::vector<Perm> generators,
                             std::vector<Perm> elements);
  static Group trivial(Point degree = 1);

  static Group cyclic(uint64_t n);          // structural C_n
  static Group cyclic_explicit(uint64_t n); // rotation action on n points
  static Group symmetric(uint32_t n);
  static Group alternating(uint32_t n);
  static Group dihedral(uint32_t n); // order 2n, n >= 3
  static Group sl2(uint32_t q);      // action on the q^2-1 nonzero vectors
  static Group psl2(uint32_t q);     // action on the projective line, q odd prime
  static Group direct_product(const std::vector<Group>& parts); // explicit, blockwise
  static Group structural_product(std::vector<Group> parts);    // Product flavor

  Flavor flavor() const;
  uint64_t order() const;
  Point degree() const;

  const std::vector<Perm>& generators() const; // Explicit only
  const std::vector<Perm>& elements() const;   // Explicit only; lazy, sorted
  bool contains(const Perm& p) const;

  uint64_t cyclic_modulus() const;        // Cyclic only
  const std::vector<Group>& parts() const; // Product only

  bool materializable() const;
  Group materialize() const; // no-op for Explicit

  // Identity of the underlying representation; used as a cache key.
  const void* rep_key() const { return rep_.get(); }

private:
  struct Rep;
  explicit Group(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<Rep> rep_;
};

// A subgroup keeps its parent plus either an element set (explicit), a
// divisor d standing for <g^d> inside cyclic C_n, or a bitmask of live
// coordinates inside a structural product.
class Subgroup {
public:
  static Subgroup whole(const Group& g);
  static Subgroup trivial_of(const Group& g);
  static Subgroup from_elements(Group parent, std::vector<Perm> elements,
                                std::vector<Perm> gens);
  static Subgroup generated(const Group& parent, std::vector<Perm> gens);
  static Subgroup cyclic_div(const Group& parent, uint64_t divisor);
  static Subgroup product_mask(const Group& parent, uint64_t mask);

  const Group& parent() const { return parent_; }
  uint64_t order() const;
  bool is_explicit() const { return kind_ == Kind::Explicit; }

  const std::vector<Perm>& elements() const; // explicit only, sorted
  const std::vector<Perm>& gens() const;     // explicit only
  uint64_t divisor() const;                  // cyclic only
  uint64_t mask() const;                     // product only

  bool contains(const Perm& p) const;      // explicit only
  bool set_equal(const Subgroup& o) const; // same parent flavor assumed
  bool is_normal_in_parent() const;

  // Re-root as a standalone group (same degree for explicit subgroups).
  Group as_group() const;

  // Stable key distinguishing subgroup content within one parent; used to
  // count distinct composition chains.
  uint64_t content_key() const;

private:
  enum class Kind { Explicit, CyclicDiv, ProductMask };
  Subgroup(Group parent, Kind kind) : parent_(std::move(parent)), kind_(kind) {}
  Group parent_;
  Kind kind_;
  std::vector<Perm> elements_;
  std::vector<Perm> gens_;
  uint64_t divisor_ = 1;
  uint64_t mask_ = 0;
};

// Subgroup closure of `gens` inside Sym(degree), bounded; sorted output.
std::vector<Perm> closure(Point degree, const std::vector<Perm>& gens, uint64_t bound);

// Subgroup generated by a sorted element list. Greedy generator picking
// keeps every intermediate closure near the final size, so large seed sets
// (conjugacy classes, kernels) stay cheap. Optionally hands out the picked
// generators, of which there are at most log2 of the span.
std::vector<Perm> span_of(Point degree, const std::vector<Perm>& sorted_seed, uint64_t bound,
                          std::vector<Perm>* gens_out = nullptr);

// Greedy generating set scan over a closed, sorted element list.
std::vector<Perm> small_generating_set(Point degree, const std::vector<Perm>& sorted_elements);

// Orbit of `seed` under conjugation by the group's generators, then the
// subgroup it generates: the smallest normal subgroup containing seed.
Subgroup normal_closure(const Group& g, const std::vector<Perm>& seed);

Subgroup derived_subgroup(const Group& g);

// Classes ordered by their lexicographically least member; each class sorted.
std::vector<std::vector<Perm>> conjugacy_classes(const Group& g);

// Normal-closure sweep over one representative per conjugacy class.
bool is_simple(const Group& g);

// An element of order |G| if one exists (the cyclic fast path), else nullopt.
std::optional<Perm> full_order_element(const Group& g);

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n); // (prime, exponent)

} // namespace pfg
