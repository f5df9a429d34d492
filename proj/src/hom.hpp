#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace pfg {

// A verified homomorphism. Explicit maps carry a full element table built
// by graph closure, which simultaneously proves the generator images extend
// to a homomorphism. Structural kinds (identity, cyclic reduction, product
// coordinate drop) are exact by arithmetic and never need element tables.
class Hom {
public:
  enum class Kind { Table, Identity, CyclicRed, ProductDrop };

  // Validates by closing the graph <(g_i, images_i)> in domain x codomain;
  // throws errc::invalid_tower when the images do not define a homomorphism.
  static Hom from_images(const Group& domain, const Group& codomain,
                         const std::vector<Perm>& images);
  // Same validation, nullopt instead of a throw (backtracking searches).
  static std::optional<Hom> try_from_images(const Group& domain, const Group& codomain,
                                            const std::vector<Perm>& images);
  static Hom identity(const Group& g);
  static Hom cyclic_reduction(const Group& domain, const Group& codomain);
  static Hom product_drop(const Group& domain, const Group& codomain);
  // Prebuilt table (quotient construction); surjective by construction.
  static Hom from_table(const Group& domain, const Group& codomain,
                        std::unordered_map<Perm, Perm, PermHash> table);

  Kind kind() const { return kind_; }
  const Group& domain() const { return domain_; }
  const Group& codomain() const { return codomain_; }
  bool surjective() const { return surjective_; }

  Perm eval(const Perm& x) const; // Table / Identity only

  Subgroup kernel() const;
  Subgroup image_subgroup(const Subgroup& h) const;    // h <= domain
  Subgroup preimage_subgroup(const Subgroup& s) const; // s <= codomain

  // outer(inner(x)); kinds must match along a tower.
  static Hom compose(const Hom& outer, const Hom& inner);

private:
  Hom(Kind kind, Group domain, Group codomain)
      : kind_(kind), domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  Kind kind_;
  Group domain_;
  Group codomain_;
  std::unordered_map<Perm, Perm, PermHash> table_;
  bool surjective_ = true;
};

// Coset action of g on the left cosets of n (n verified normal). Cosets are
// labeled by their lexicographically least representative, in sorted order,
// so the identity coset is always point 0. Returns the quotient group and
// the projection. quotient(g, trivial) returns g itself with the identity.
std::pair<Group, Hom> quotient(const Group& g, const Subgroup& n);

} // namespace pfg
