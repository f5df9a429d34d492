#include "sections.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "error.hpp"

namespace pfg {

std::vector<Subgroup> all_subgroups(const Group& g) {
  uint64_t n = g.order();
  if (n > kSubgroupBound) fail(errc::bound_exceeded, "subgroup enumeration bound exceeded");
  Group gg = g.materialize();
  const std::vector<Perm>& elems = gg.elements();

  std::set<std::vector<Perm>> found;
  found.insert({Perm::identity(gg.degree())});
  for (const Perm& x : elems) {
    std::vector<Perm> cyc{x};
    cyc = span_of(gg.degree(), cyc, n);
    found.insert(std::move(cyc));
  }

  // Extend every known subgroup by every outside element until nothing new
  // appears. Each span is a subgroup, and any subgroup H arises from a
  // maximal chain 1 < ... < H of one-element extensions, so the sweep is
  // exhaustive.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Perm>> snapshot(found.begin(), found.end());
    for (const std::vector<Perm>& h : snapshot) {
      if (h.size() == n) continue;
      for (const Perm& x : elems) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<Perm> seed = h;
        seed.insert(std::lower_bound(seed.begin(), seed.end(), x), x);
        std::vector<Perm> span = span_of(gg.degree(), seed, n);
        if (found.insert(std::move(span)).second) grew = true;
      }
    }
  }

  std::vector<std::vector<Perm>> flat(found.begin(), found.end());
  std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(flat.size());
  for (std::vector<Perm>& h : flat) {
    std::vector<Perm> gens = small_generating_set(gg.degree(), h);
    out.push_back(Subgroup::from_elements(g, std::move(h), std::move(gens)));
  }
  return out;
}

std::optional<SectionWitness> is_section(const Group& target, const Group& ambient) {
  if (ambient.order() > kSubgroupBound)
    fail(errc::bound_exceeded, "subgroup enumeration bound exceeded");
  if (target.order() > ambient.order())
    fail(errc::precondition, "target exceeds the ambient group");
  Group tg = target.materialize();
  uint64_t t = tg.order();

  for (const Subgroup& c : all_subgroups(ambient)) {
    if (c.order() % t) continue;
    Group cg = c.as_group();
    for (const Subgroup& d : normal_subgroups(cg)) {
      if (c.order() / d.order() != t) continue;
      Group q = quotient(cg, d).first;
      if (!isomorphic(q, tg)) continue;
      SectionWitness w{c, Subgroup::from_elements(ambient, d.elements(), d.gens()),
                       std::nullopt};
      if (t > 1) {
        try {
          w.quotient_type = identify(q);
        } catch (const Error&) {
          // Non-simple sections carry no type tag.
        }
      }
      return w;
    }
  }
  return std::nullopt;
}

std::vector<SimpleType> simple_sections(const Group& ambient) {
  // A simple section C/D forces D maximal normal, so C/D is a composition
  // factor of C; conversely every factor of a subgroup is a section.
  std::vector<SimpleType> out;
  for (const Subgroup& c : all_subgroups(ambient)) {
    if (c.order() == 1) continue;
    for (const auto& [ty, cnt] : factor_multiset(c.as_group())) {
      bool seen = false;
      for (const SimpleType& u : out)
        if (same_type(ty, u)) seen = true;
      if (!seen) out.push_back(ty);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverageOutcome power_word_coverage(const Group& g, uint64_t q, uint64_t m) {
  if (q < 2 || m < 1) fail(errc::precondition, "need q >= 2 and m >= 1");
  if (g.order() > 2000) fail(errc::bound_exceeded, "power word coverage bound exceeded");
  Group gg = g.materialize();
  const std::vector<Perm>& elems = gg.elements();

  std::vector<Perm> powers;
  {
    std::unordered_set<Perm, PermHash> seen;
    for (const Perm& x : elems) {
      Perm p = Perm::identity(gg.degree());
      for (uint64_t i = 0, r = q % x.order(); i < r; ++i) p = p * x;
      if (seen.insert(p).second) powers.push_back(p);
    }
  }

  std::unordered_set<Perm, PermHash> reached;
  for (const Perm& x : elems)
    if (std::gcd(x.order(), q) == 1) reached.insert(x);

  for (uint64_t round = 0; round < m; ++round) {
    std::unordered_set<Perm, PermHash> next;
    next.reserve(reached.size());
    for (const Perm& a : reached)
      for (const Perm& s : powers) next.insert(a * s);
    reached = std::move(next);
    if (reached.size() == elems.size()) break; // e is a q-th power, so done
  }

  CoverageOutcome out;
  out.covered = reached.size();
  out.order = elems.size();
  out.pass = out.covered == out.order;
  out.q = q;
  out.m = m;
  return out;
}

PerfectnessOutcome perfectness_check(const Group& g) {
  PerfectnessOutcome out;
  for (const auto& [ty, cnt] : factor_multiset(g))
    if (ty.kind == SimpleType::Kind::Cyclic) out.abelian_factor = true;
  out.perfect = derived_subgroup(g).order() == g.order();
  out.pass = out.abelian_factor || out.perfect;
  return out;
}

A5Outcome a5_corollary_check(const Group& g) {
  if (g.order() > kSubgroupBound)
    fail(errc::bound_exceeded, "subgroup enumeration bound exceeded");
  SimpleType a5 = identify(reference_alternating(5));
  for (const auto& [ty, cnt] : factor_multiset(g))
    if (ty.kind != SimpleType::Kind::Cyclic && !same_type(ty, a5))
      fail(errc::precondition, "a nonabelian factor is not A5");

  A5Outcome out;
  out.sections = simple_sections(g);
  out.pass = true;
  for (const SimpleType& ty : out.sections)
    if (ty.kind != SimpleType::Kind::Cyclic && !same_type(ty, a5)) out.pass = false;
  return out;
}

} // namespace pfg
