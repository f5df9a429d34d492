#include "hom.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "error.hpp"

namespace pfg {

std::optional<Hom> Hom::try_from_images(const Group& domain, const Group& codomain,
                                        const std::vector<Perm>& images) {
  const auto& gens = domain.generators();
  if (images.size() != gens.size()) return std::nullopt;
  for (const Perm& m : images)
    if (!codomain.contains(m)) return std::nullopt;

  Hom h(Kind::Table, domain, codomain);
  uint64_t dom_order = domain.order();
  h.table_.reserve(dom_order);
  std::deque<const Perm*> work;
  auto [it, ok] =
      h.table_.emplace(Perm::identity(domain.degree()), Perm::identity(codomain.degree()));
  work.push_back(&it->first);
  std::unordered_set<Perm, PermHash> image_set;
  image_set.insert(it->second);
  while (!work.empty()) {
    const Perm& x = *work.front();
    work.pop_front();
    Perm y = h.table_.at(x);
    for (size_t i = 0; i < gens.size(); ++i) {
      Perm xn = x * gens[i];
      Perm yn = y * images[i];
      auto [slot, inserted] = h.table_.emplace(std::move(xn), yn);
      if (!inserted) {
        if (!(slot->second == yn)) return std::nullopt;
        continue;
      }
      image_set.insert(std::move(yn));
      work.push_back(&slot->first);
    }
  }
  // <gens> = domain, so the closed graph covers every element exactly once.
  h.surjective_ = image_set.size() == codomain.order();
  return h;
}

Hom Hom::from_images(const Group& domain, const Group& codomain,
                     const std::vector<Perm>& images) {
  const auto& gens = domain.generators();
  if (images.size() != gens.size())
    fail(errc::invalid_tower, "generator image count mismatch");
  for (const Perm& m : images)
    if (!codomain.contains(m))
      fail(errc::invalid_tower, "generator image outside codomain");
  std::optional<Hom> h = try_from_images(domain, codomain, images);
  if (!h) fail(errc::invalid_tower, "generator images do not extend to a homomorphism");
  return *std::move(h);
}

Hom Hom::identity(const Group& g) { return Hom(Kind::Identity, g, g); }

Hom Hom::cyclic_reduction(const Group& domain, const Group& codomain) {
  uint64_t a = domain.cyclic_modulus(), b = codomain.cyclic_modulus();
  if (a % b) fail(errc::invalid_tower, "cyclic reduction requires |codomain| dividing |domain|");
  return Hom(Kind::CyclicRed, domain, codomain);
}

Hom Hom::product_drop(const Group& domain, const Group& codomain) {
  const auto& dp = domain.parts();
  const auto& cp = codomain.parts();
  if (cp.size() >= dp.size()) fail(errc::invalid_tower, "product drop must shrink the part list");
  for (size_t i = 0; i < cp.size(); ++i) {
    const Group& a = dp[i];
    const Group& b = cp[i];
    // Parts are stored materialized, so literal equality is decidable.
    bool same = a.rep_key() == b.rep_key() ||
                (a.degree() == b.degree() && a.generators() == b.generators());
    if (!same) fail(errc::invalid_tower, "product drop requires a shared part prefix");
  }
  return Hom(Kind::ProductDrop, domain, codomain);
}

Hom Hom::from_table(const Group& domain, const Group& codomain,
                    std::unordered_map<Perm, Perm, PermHash> table) {
  Hom h(Kind::Table, domain, codomain);
  h.table_ = std::move(table);
  return h;
}

Perm Hom::eval(const Perm& x) const {
  switch (kind_) {
  case Kind::Identity:
    return x;
  case Kind::Table: {
    auto it = table_.find(x);
    if (it == table_.end()) fail(errc::precondition, "element outside homomorphism domain");
    return it->second;
  }
  default:
    fail(errc::precondition, "structural homomorphism has no element evaluation");
  }
}

Subgroup Hom::kernel() const {
  switch (kind_) {
  case Kind::Identity:
    return Subgroup::trivial_of(domain_);
  case Kind::CyclicRed:
    return Subgroup::cyclic_div(domain_, codomain_.cyclic_modulus());
  case Kind::ProductDrop: {
    uint64_t mask = 0;
    for (size_t i = codomain_.parts().size(); i < domain_.parts().size(); ++i)
      mask |= uint64_t{1} << i;
    return Subgroup::product_mask(domain_, mask);
  }
  case Kind::Table: {
    std::vector<Perm> ker;
    for (const auto& [x, y] : table_)
      if (y.is_identity()) ker.push_back(x);
    std::sort(ker.begin(), ker.end());
    std::vector<Perm> gens = small_generating_set(domain_.degree(), ker);
    return Subgroup::from_elements(domain_, std::move(ker), std::move(gens));
  }
  }
  fail(errc::precondition, "unreachable");
}

Subgroup Hom::image_subgroup(const Subgroup& h) const {
  switch (kind_) {
  case Kind::Identity:
    return h;
  case Kind::CyclicRed:
    return Subgroup::cyclic_div(codomain_,
                                std::gcd(h.divisor(), codomain_.cyclic_modulus()));
  case Kind::ProductDrop:
    return Subgroup::product_mask(
        codomain_, h.mask() & ((uint64_t{1} << codomain_.parts().size()) - 1));
  case Kind::Table: {
    std::unordered_set<Perm, PermHash> img;
    for (const Perm& x : h.elements()) img.insert(eval(x));
    std::vector<Perm> elems(img.begin(), img.end());
    std::sort(elems.begin(), elems.end());
    std::vector<Perm> gens;
    for (const Perm& g : h.gens()) gens.push_back(eval(g));
    return Subgroup::from_elements(codomain_, std::move(elems), std::move(gens));
  }
  }
  fail(errc::precondition, "unreachable");
}

Subgroup Hom::preimage_subgroup(const Subgroup& s) const {
  switch (kind_) {
  case Kind::Identity:
    return s;
  case Kind::CyclicRed:
    return Subgroup::cyclic_div(domain_, s.divisor());
  case Kind::ProductDrop: {
    uint64_t mask = s.mask();
    for (size_t i = codomain_.parts().size(); i < domain_.parts().size(); ++i)
      mask |= uint64_t{1} << i;
    return Subgroup::product_mask(domain_, mask);
  }
  case Kind::Table: {
    std::vector<Perm> pre;
    for (const auto& [x, y] : table_)
      if (s.contains(y)) pre.push_back(x);
    std::sort(pre.begin(), pre.end());
    std::vector<Perm> gens = small_generating_set(domain_.degree(), pre);
    return Subgroup::from_elements(domain_, std::move(pre), std::move(gens));
  }
  }
  fail(errc::precondition, "unreachable");
}

Hom Hom::compose(const Hom& outer, const Hom& inner) {
  if (inner.kind_ == Kind::Identity) return outer;
  if (outer.kind_ == Kind::Identity) return inner;
  if (outer.kind_ != inner.kind_)
    fail(errc::precondition, "cannot compose homomorphisms of different kinds");
  switch (outer.kind_) {
  case Kind::CyclicRed:
    return cyclic_reduction(inner.domain_, outer.codomain_);
  case Kind::ProductDrop:
    return product_drop(inner.domain_, outer.codomain_);
  case Kind::Table: {
    std::unordered_map<Perm, Perm, PermHash> table;
    table.reserve(inner.table_.size());
    for (const auto& [x, y] : inner.table_) table.emplace(x, outer.eval(y));
    Hom h = from_table(inner.domain_, outer.codomain_, std::move(table));
    h.surjective_ = inner.surjective_ && outer.surjective_;
    return h;
  }
  default:
    fail(errc::precondition, "unreachable");
  }
}

std::pair<Group, Hom> quotient(const Group& g, const Subgroup& n) {
  if (n.order() == 1) return {g, Hom::identity(g)};
  if (!n.is_normal_in_parent()) fail(errc::not_normal, "subgroup is not normal");
  const std::vector<Perm>& elems = g.elements();

  std::unordered_map<Perm, uint32_t, PermHash> coset_of;
  coset_of.reserve(elems.size());
  std::vector<Perm> reps;
  for (const Perm& x : elems) {
    if (coset_of.count(x)) continue;
    uint32_t c = static_cast<uint32_t>(reps.size());
    reps.push_back(x); // lex-least in its coset: elems is sorted
    for (const Perm& m : n.elements()) coset_of.emplace(x * m, c);
  }
  Point qdeg = static_cast<Point>(reps.size());

  auto action = [&](const Perm& x) {
    std::vector<Point> images(qdeg);
    for (Point c = 0; c < qdeg; ++c) images[c] = coset_of.at(x * reps[c]);
    return Perm(std::move(images));
  };

  std::unordered_map<Perm, Perm, PermHash> table;
  table.reserve(elems.size());
  std::unordered_set<Perm, PermHash> qelems_set;
  for (const Perm& x : elems) {
    Perm a = action(x);
    qelems_set.insert(a);
    table.emplace(x, std::move(a));
  }
  std::vector<Perm> qelems(qelems_set.begin(), qelems_set.end());
  std::sort(qelems.begin(), qelems.end());

  std::vector<Perm> qgens;
  for (const Perm& gen : g.generators()) qgens.push_back(table.at(gen));
  Group q = Group::from_elements(qdeg, std::move(qgens), std::move(qelems));
  return {q, Hom::from_table(g, q, std::move(table))};
}

} // namespace pfg
