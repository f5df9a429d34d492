#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"

namespace pfg {

// Sorted (element order, count) pairs; an isomorphism invariant.
using OrderHistogram = std::vector<std::pair<uint64_t, uint64_t>>;

OrderHistogram order_histogram(const Group& g);

// Isomorphism type of a finite simple group. Recognised kinds carry the
// defining parameter; anything else keeps order + histogram and a witness
// group so equality stays decidable.
struct SimpleType {
  enum class Kind { Cyclic, Alternating, PSL2, Other };

  Kind kind = Kind::Other;
  uint64_t param = 0; // p / n / q for the recognised kinds
  uint64_t order = 0;
  OrderHistogram fingerprint;
  std::shared_ptr<const Group> witness; // populated for Other only

  std::string label() const; // "C5", "A6", "PSL2(7)", "Other(order=..,h=..)"

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.kind == b.kind && a.param == b.param && a.order == b.order &&
           a.fingerprint == b.fingerprint;
  }
  // Total order used as the multiset key; order first so factor lists
  // serialize smallest factor first.
  friend bool operator<(const SimpleType& a, const SimpleType& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.param != b.param) return a.param < b.param;
    return a.fingerprint < b.fingerprint;
  }
};

// Requires a simple input (errc::not_simple / errc::trivial_group).
SimpleType identify(const Group& g);

// Equality of isomorphism types. Two Other types with matching invariants
// are settled by an explicit isomorphism search; errc::ambiguous when that
// search is out of reach.
bool same_type(const SimpleType& a, const SimpleType& b);
bool same_type(const Group& g, const SimpleType& t);

// Bounded backtracking search; errc::bound_exceeded above order 2000.
inline constexpr uint64_t kIsoBound = 2000;
bool isomorphic(const Group& a, const Group& b);

// Memoized reference copies of the recognised nonabelian kinds.
const Group& reference_alternating(uint32_t n); // 5..8
const Group& reference_psl2(uint32_t q);        // 5, 7, 11, 13

// "C7" / "A5" / "PSL2(11)" -> a group of that type, structural where
// possible. Rejects labels outside the recognised simple families.
Group group_for_type_label(const std::string& label);

} // namespace pfg
