#include "tower.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <numeric>

#include "error.hpp"

namespace pfg {

struct Tower::Rep {
  std::vector<Group> levels;
  std::vector<Hom> maps;
  std::optional<TowerFamily> family;
};

size_t Tower::size() const { return rep_->levels.size(); }
const Group& Tower::level(size_t i) const { return rep_->levels[i]; }
const Hom& Tower::map(size_t i) const { return rep_->maps[i]; }
const std::optional<TowerFamily>& Tower::family() const { return rep_->family; }
const void* Tower::rep_key() const { return rep_.get(); }

Tower Tower::from_levels(std::vector<Group> levels, std::vector<Hom> maps,
                         std::optional<TowerFamily> family) {
  if (levels.empty()) fail(errc::precondition, "a tower needs at least one level");
  if (maps.size() + 1 != levels.size())
    fail(errc::invalid_tower, "a tower with N levels needs exactly N-1 maps");
  auto rep = std::make_shared<Rep>();
  rep->levels = std::move(levels);
  rep->maps = std::move(maps);
  rep->family = std::move(family);
  return Tower(std::move(rep));
}

Tower Tower::without_family() const {
  auto rep = std::make_shared<Rep>(*rep_);
  rep->family.reset();
  return Tower(std::move(rep));
}

Tower Tower::prefix(size_t levels) const {
  if (levels == 0 || levels > rep_->levels.size())
    fail(errc::precondition, "prefix length out of range");
  auto rep = std::make_shared<Rep>();
  rep->levels.assign(rep_->levels.begin(), rep_->levels.begin() + levels);
  rep->maps.assign(rep_->maps.begin(), rep_->maps.begin() + (levels - 1));
  rep->family = rep_->family;
  return Tower(std::move(rep));
}

namespace {

uint64_t checked_pow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  while (exp--) {
    if (r > UINT64_MAX / base) fail(errc::bound_exceeded, "tower level order overflows");
    r *= base;
  }
  return r;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

// Structural identity of groups, not isomorphism: shared rep, or same
// construction data. Used to bind map endpoints to tower levels.
bool same_group(const Group& a, const Group& b) {
  if (a.rep_key() == b.rep_key()) return true;
  if (a.flavor() != b.flavor()) return false;
  switch (a.flavor()) {
  case Flavor::Cyclic:
    return a.cyclic_modulus() == b.cyclic_modulus();
  case Flavor::Product: {
    if (a.parts().size() != b.parts().size()) return false;
    for (size_t i = 0; i < a.parts().size(); ++i)
      if (!same_group(a.parts()[i], b.parts()[i])) return false;
    return true;
  }
  case Flavor::Explicit:
    return a.degree() == b.degree() && a.order() == b.order() &&
           a.generators() == b.generators();
  }
  return false;
}

} // namespace

Tower Tower::zp(uint64_t p, uint32_t prefix) {
  if (prefix == 0) fail(errc::precondition, "prefix must be at least 1");
  if (!is_prime(p)) fail(errc::precondition, "zp needs a prime modulus");
  std::vector<Group> levels;
  for (uint32_t n = 1; n <= prefix; ++n) levels.push_back(Group::cyclic(checked_pow(p, n)));
  std::vector<Hom> maps;
  for (uint32_t n = 0; n + 1 < prefix; ++n)
    maps.push_back(Hom::cyclic_reduction(levels[n + 1], levels[n]));
  TowerFamily fam;
  fam.kind = "zp";
  fam.parameters = {p};
  fam.eventual_kernel_factors = {identify(Group::cyclic(p))};
  return from_levels(std::move(levels), std::move(maps), std::move(fam));
}

Tower Tower::zhat(uint32_t prefix) {
  if (prefix == 0) fail(errc::precondition, "prefix must be at least 1");
  if (prefix > 20) fail(errc::bound_exceeded, "factorial level order overflows");
  std::vector<Group> levels;
  uint64_t f = 1;
  for (uint32_t n = 1; n <= prefix; ++n) {
    f *= n;
    levels.push_back(Group::cyclic(f));
  }
  std::vector<Hom> maps;
  for (uint32_t n = 0; n + 1 < prefix; ++n)
    maps.push_back(Hom::cyclic_reduction(levels[n + 1], levels[n]));
  TowerFamily fam;
  fam.kind = "zhat";
  fam.kernel_factors_all_primes = true;
  return from_levels(std::move(levels), std::move(maps), std::move(fam));
}

Tower Tower::prod_simple(const std::vector<std::string>& labels, uint32_t prefix) {
  if (prefix == 0) fail(errc::precondition, "prefix must be at least 1");
  if (labels.empty()) fail(errc::precondition, "prod_simple needs at least one part label");
  if (prefix > 63) fail(errc::bound_exceeded, "too many product coordinates");
  std::vector<Group> parts;
  for (uint32_t i = 0; i < prefix; ++i)
    parts.push_back(group_for_type_label(labels[i % labels.size()]));
  std::vector<Group> levels;
  for (uint32_t n = 1; n <= prefix; ++n)
    levels.push_back(Group::structural_product({parts.begin(), parts.begin() + n}));
  std::vector<Hom> maps;
  for (uint32_t n = 0; n + 1 < prefix; ++n)
    maps.push_back(Hom::product_drop(levels[n + 1], levels[n]));
  TowerFamily fam;
  fam.kind = "prod_simple";
  fam.part_labels = labels;
  for (const std::string& lab : labels) {
    SimpleType t = identify(group_for_type_label(lab));
    bool seen = false;
    for (const SimpleType& u : fam.eventual_kernel_factors)
      if (same_type(t, u)) seen = true;
    if (!seen) fam.eventual_kernel_factors.push_back(std::move(t));
  }
  return from_levels(std::move(levels), std::move(maps), std::move(fam));
}

Tower Tower::constant(const Group& g, uint32_t prefix) {
  if (prefix == 0) fail(errc::precondition, "prefix must be at least 1");
  std::vector<Group> levels(prefix, g);
  std::vector<Hom> maps;
  for (uint32_t n = 0; n + 1 < prefix; ++n) maps.push_back(Hom::identity(g));
  TowerFamily fam;
  fam.kind = "constant";
  return from_levels(std::move(levels), std::move(maps), std::move(fam));
}

namespace {

TowerCheck flag(std::string kind, size_t level, std::string detail) {
  TowerCheck c;
  c.pass = false;
  c.violation = std::move(kind);
  c.level = level;
  c.detail = std::move(detail);
  return c;
}

TowerCheck check_family(const Tower& t) {
  const TowerFamily& f = *t.family();
  if (f.kind == "zp") {
    if (f.parameters.size() != 1 || !is_prime(f.parameters[0]))
      return flag("FamilyMismatch", 1, "zp annotation needs a prime parameter");
    uint64_t want = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      want = checked_pow(f.parameters[0], static_cast<uint32_t>(i + 1));
      if (t.level(i).flavor() != Flavor::Cyclic || t.level(i).order() != want)
        return flag("FamilyMismatch", i + 1, "level is not the cyclic p-power the rule demands");
    }
  } else if (f.kind == "zhat") {
    uint64_t want = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      want *= i + 1;
      if (t.level(i).flavor() != Flavor::Cyclic || t.level(i).order() != want)
        return flag("FamilyMismatch", i + 1, "level is not the cyclic factorial the rule demands");
    }
  } else if (f.kind == "prod_simple") {
    if (f.part_labels.empty()) return flag("FamilyMismatch", 1, "prod_simple annotation needs labels");
    for (size_t i = 0; i < t.size(); ++i) {
      const Group& g = t.level(i);
      if (g.flavor() != Flavor::Product || g.parts().size() != i + 1)
        return flag("FamilyMismatch", i + 1, "level is not the product of the first n parts");
      for (size_t j = 0; j <= i; ++j) {
        SimpleType want = identify(group_for_type_label(f.part_labels[j % f.part_labels.size()]));
        if (!same_type(g.parts()[j], want))
          return flag("FamilyMismatch", i + 1, "part type differs from its label");
      }
    }
  } else if (f.kind == "constant") {
    for (size_t i = 1; i < t.size(); ++i)
      if (!same_group(t.level(i), t.level(0)))
        return flag("FamilyMismatch", i + 1, "constant tower levels differ");
  } else {
    return flag("FamilyMismatch", 1, "unknown family kind");
  }
  return {};
}

} // namespace

TowerCheck validate(const Tower& t) {
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    const Hom& m = t.map(i);
    if (!same_group(m.domain(), t.level(i + 1)) || !same_group(m.codomain(), t.level(i)))
      return flag("InvalidMap", i + 1, "map endpoints do not bind the adjacent levels");
    if (!m.surjective())
      return flag("NotSurjective", i + 1, "connecting map misses part of its codomain");
    uint64_t hi = t.level(i + 1).order();
    uint64_t lo = t.level(i).order();
    uint64_t ker = m.kernel().order();
    if (ker == 0 || hi % ker || hi / ker != lo)
      return flag("InvalidMap", i + 1, "level orders break |G_{n+1}| = |G_n| * |ker|");
  }
  if (t.family()) return check_family(t);
  return {};
}

namespace {

void require_valid(const Tower& t) {
  TowerCheck c = validate(t);
  if (c.pass) return;
  char at[32];
  std::snprintf(at, sizeof at, "(%llu): ", static_cast<unsigned long long>(c.level));
  fail(errc::invalid_tower, c.violation + at + c.detail);
}

bool multiset_same(const FactorMultiset& a, const FactorMultiset& b) {
  uint64_t na = 0, nb = 0;
  for (const auto& [ty, c] : a) na += c;
  for (const auto& [ty, c] : b) nb += c;
  if (na != nb) return false;
  for (const auto& [ty, c] : a)
    if (n_count(b, ty) != c) return false;
  return true;
}

} // namespace

std::string Multiplicity::label() const {
  char buf[40];
  switch (kind) {
  case Kind::Exact:
    std::snprintf(buf, sizeof buf, "Exact(%llu)", static_cast<unsigned long long>(count));
    return buf;
  case Kind::AtLeast:
    std::snprintf(buf, sizeof buf, "AtLeast(%llu)", static_cast<unsigned long long>(count));
    return buf;
  case Kind::Infinite:
    return "Infinite";
  }
  return "";
}

FactorProfile profile(const Tower& t) {
  require_valid(t);
  std::vector<FactorMultiset> per_level;
  per_level.reserve(t.size());
  for (size_t i = 0; i < t.size(); ++i) per_level.push_back(factor_multiset(t.level(i)));

  std::vector<SimpleType> types;
  for (const auto& m : per_level)
    for (const auto& [ty, cnt] : m) {
      bool seen = false;
      for (const SimpleType& u : types)
        if (same_type(ty, u)) seen = true;
      if (!seen) types.push_back(ty);
    }
  std::sort(types.begin(), types.end());

  FactorProfile out;
  for (const SimpleType& ty : types) {
    ProfileEntry e{ty, {}, {}};
    for (const auto& m : per_level) e.trace.push_back(n_count(m, ty));
    if (!t.family()) {
      e.mult = {Multiplicity::Kind::AtLeast, e.trace.back()};
    } else {
      const TowerFamily& f = *t.family();
      bool recurs = f.kernel_factors_all_primes && ty.kind == SimpleType::Kind::Cyclic;
      for (const SimpleType& u : f.eventual_kernel_factors)
        if (same_type(ty, u)) recurs = true;
      e.mult = recurs ? Multiplicity{Multiplicity::Kind::Infinite, 0}
                      : Multiplicity{Multiplicity::Kind::Exact, e.trace.back()};
    }
    out.push_back(std::move(e));
  }
  return out;
}

InducedSeries induced_series(const Tower& t, uint64_t seed) {
  require_valid(t);
  InducedSeries s{t, seed, {}};
  s.blocks.push_back(composition_series(t.level(0), seed));
  for (size_t i = 0; i + 1 < t.size(); ++i)
    s.blocks.push_back(composition_series(t.map(i).kernel().as_group(), seed));
  return s;
}

FactorMultiset accumulate(const InducedSeries& s, size_t through_block) {
  if (through_block >= s.blocks.size()) fail(errc::precondition, "block index out of range");
  FactorMultiset m;
  for (size_t b = 0; b <= through_block; ++b)
    for (const auto& [ty, cnt] : factors_of(s.blocks[b])) m[ty] += cnt;
  return m;
}

MatchOutcome match_series(const Tower& t, uint64_t seed_a, uint64_t seed_b) {
  if (seed_a == seed_b) fail(errc::precondition, "seeds must differ");
  InducedSeries a = induced_series(t, seed_a);
  InducedSeries b = induced_series(t, seed_b);
  for (size_t blk = 0; blk < a.blocks.size(); ++blk) {
    if (!multiset_same(accumulate(a, blk), accumulate(b, blk))) {
      MatchOutcome o;
      o.pass = false;
      o.first_divergence = blk;
      o.detail = "accumulated factor multisets diverge";
      return o;
    }
  }
  return {};
}

ClosedSubgroup ClosedSubgroup::from_levels(Tower tower, std::vector<Subgroup> levels) {
  require_valid(tower);
  if (levels.size() != tower.size())
    fail(errc::incompatible_subgroup, "need exactly one subgroup per tower level");
  for (size_t i = 0; i < levels.size(); ++i)
    if (!same_group(levels[i].parent(), tower.level(i)))
      fail(errc::incompatible_subgroup, "subgroup is not rooted in its level");
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    Subgroup img = tower.map(i).image_subgroup(levels[i + 1]);
    if (!img.set_equal(levels[i]))
      fail(errc::incompatible_subgroup, "map image does not land on the subgroup below");
  }
  return ClosedSubgroup(std::move(tower), std::move(levels));
}

namespace {

struct RealizedStep {
  Subgroup sub; // chain member pulled back into G_N
  SimpleType factor;
};

// The concatenated series as an honest descending chain in the top level.
// Block b lives in level(b); its steps pull back through the composite
// G_N -> level(b). For cyclic towers divisor arithmetic replaces preimages:
// reduction preimages keep divisors, and a kernel-series step of divisor e
// inside ker(level(b) -> level(b-1)) is divisor e * |level(b-1)| upstairs.
std::vector<RealizedStep> realize_chain(const InducedSeries& s) {
  const Tower& t = s.tower;
  size_t n = t.size();
  const Group& top = t.level(n - 1);
  std::vector<RealizedStep> chain;

  if (top.flavor() == Flavor::Cyclic) {
    uint64_t below = 1; // order of the level under the current block
    for (size_t b = 0; b < s.blocks.size(); ++b) {
      for (const SeriesStep& st : s.blocks[b].steps)
        chain.push_back({Subgroup::cyclic_div(top, st.subgroup.divisor() * below), st.factor});
      below = t.level(b).order();
    }
    return chain;
  }

  if (top.flavor() != Flavor::Explicit)
    fail(errc::precondition, "chain realization needs explicit or cyclic levels");

  // psi[j]: G_N -> level(j) composites, built from the top down.
  std::vector<std::optional<Hom>> psi(n >= 1 ? n - 1 : 0);
  if (n >= 2) {
    psi[n - 2] = t.map(n - 2);
    for (size_t j = n - 2; j > 0; --j) psi[j - 1] = Hom::compose(t.map(j - 1), *psi[j]);
  }

  for (size_t b = 0; b < s.blocks.size(); ++b) {
    for (const SeriesStep& st : s.blocks[b].steps) {
      Subgroup rooted = b == 0 ? st.subgroup
                               : Subgroup::from_elements(t.level(b), st.subgroup.elements(),
                                                         st.subgroup.gens());
      Subgroup realized = b == n - 1 ? std::move(rooted) : psi[b]->preimage_subgroup(rooted);
      chain.push_back({std::move(realized), st.factor});
    }
  }
  return chain;
}

} // namespace

IntersectOutcome intersect_series(const InducedSeries& s, const ClosedSubgroup& h) {
  const Tower& t = s.tower;
  if (h.tower().rep_key() != t.rep_key()) {
    if (h.tower().size() != t.size())
      fail(errc::incompatible_subgroup, "subgroup belongs to a different tower");
    for (size_t i = 0; i < t.size(); ++i)
      if (!same_group(h.tower().level(i), t.level(i)))
        fail(errc::incompatible_subgroup, "subgroup belongs to a different tower");
  }

  size_t n = t.size();
  const Group& top = t.level(n - 1);
  const Subgroup& hn = h.level(n - 1);
  std::vector<RealizedStep> chain = realize_chain(s);

  IntersectOutcome out;
  out.pass = true;

  if (top.flavor() == Flavor::Cyclic) {
    uint64_t hd = hn.divisor();
    uint64_t prev = hd; // divisor of G_N cap H = H itself
    for (const RealizedStep& st : chain) {
      uint64_t cur = std::lcm(st.sub.divisor(), hd);
      uint64_t ratio = cur / prev;
      if (ratio == 1) {
        ++out.trivial_steps;
      } else if (st.factor.kind == SimpleType::Kind::Cyclic && st.factor.param == ratio) {
        ++out.matched_steps;
        out.factors[st.factor] += 1;
      } else {
        out.pass = false;
        out.detail = "intersected quotient does not match the series factor";
        break;
      }
      prev = cur;
    }
  } else {
    const std::vector<Perm>& helems = hn.elements();
    std::vector<Perm> prev = helems;
    for (const RealizedStep& st : chain) {
      std::vector<Perm> cur;
      std::set_intersection(st.sub.elements().begin(), st.sub.elements().end(), helems.begin(),
                            helems.end(), std::back_inserter(cur));
      if (cur.size() == prev.size()) {
        ++out.trivial_steps;
        prev = std::move(cur);
        continue;
      }
      std::vector<Perm> pg = small_generating_set(top.degree(), prev);
      Group pgrp = Group::from_elements(top.degree(), pg, prev);
      Subgroup csub =
          Subgroup::from_elements(pgrp, cur, small_generating_set(top.degree(), cur));
      if (!csub.is_normal_in_parent()) {
        out.pass = false;
        out.detail = "intersected step is not normal in its predecessor";
        break;
      }
      bool matched = false;
      try {
        Group q = quotient(pgrp, csub).first;
        SimpleType qt = identify(q);
        if (same_type(qt, st.factor)) {
          matched = true;
          out.factors[qt] += 1;
        }
      } catch (const Error&) {
        matched = false;
      }
      if (!matched) {
        out.pass = false;
        out.detail = "intersected quotient does not match the series factor";
        break;
      }
      ++out.matched_steps;
      prev = std::move(cur);
    }
    if (out.pass && prev.size() != 1) {
      out.pass = false;
      out.detail = "intersected chain does not reach the trivial group";
    }
  }

  // The deduplicated chain must be a full composition series of H_N.
  if (out.pass && !multiset_same(out.factors, factor_multiset(hn.as_group()))) {
    out.pass = false;
    out.detail = "intersected chain misses factors of the subgroup";
  }
  return out;
}

bool prosolvable(const Tower& t) {
  require_valid(t);
  for (size_t i = 0; i < t.size(); ++i)
    if (!is_solvable(t.level(i))) return false;
  return true;
}

bool anabelian(const Tower& t) {
  for (const ProfileEntry& e : profile(t))
    if (e.type.kind == SimpleType::Kind::Cyclic) return false;
  return true;
}

} // namespace pfg
