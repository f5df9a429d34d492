#include "series.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "error.hpp"
#include "rng.hpp"

namespace pfg {

namespace {

// Content-keyed memo: jh_verify re-walks the same groups once per seed, and
// subgroups re-rooted per seed never share rep identity, so the key hashes
// the element list and a hit is verified by exact comparison.
struct NormalsEntry {
  std::vector<Perm> group_elements;
  std::vector<std::pair<std::vector<Perm>, std::vector<Perm>>> subgroups; // (elements, gens)
};

std::mutex normals_mu;
std::unordered_multimap<uint64_t, NormalsEntry> normals_memo;

uint64_t elements_hash(const std::vector<Perm>& elems) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const Perm& p : elems) {
    h ^= p.hash();
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed-indexed position: consecutive seeds rotate through the ties, so a
// group with k maximal candidates shows all k chains within k seeds.
uint64_t pick_index(uint64_t seed, uint64_t step, uint64_t count) {
  return (seed + mix64(0x705f9c3a, step)) % count;
}

std::vector<Subgroup> normal_subgroups_explicit(const Group& g) {
  const std::vector<Perm>& elems = g.elements();
  uint64_t n = elems.size();
  uint64_t key = mix64(elements_hash(elems), n);
  {
    std::lock_guard<std::mutex> lock(normals_mu);
    auto [lo, hi] = normals_memo.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (it->second.group_elements == elems) {
        std::vector<Subgroup> out;
        for (const auto& [se, sg] : it->second.subgroups)
          out.push_back(Subgroup::from_elements(g, se, sg));
        return out;
      }
  }

  Point deg = g.degree();
  std::map<std::vector<Perm>, std::vector<Perm>> found; // elements -> gens
  found.emplace(std::vector<Perm>{Perm::identity(deg)}, std::vector<Perm>{});
  for (const auto& cls : conjugacy_classes(g)) {
    std::vector<Perm> gens;
    std::vector<Perm> span = span_of(deg, cls, n, &gens);
    found.emplace(std::move(span), std::move(gens));
  }
  // Join closure: every normal subgroup is the join of the class spans it
  // contains, so saturating pairwise joins reaches all of them.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const std::vector<Perm>*> keys;
    std::vector<const std::vector<Perm>*> gens_of;
    for (const auto& [e, gs] : found) {
      keys.push_back(&e);
      gens_of.push_back(&gs);
    }
    for (size_t i = 0; i < keys.size(); ++i)
      for (size_t j = i + 1; j < keys.size(); ++j) {
        std::vector<Perm> seed;
        seed.reserve(gens_of[i]->size() + gens_of[j]->size());
        seed.insert(seed.end(), gens_of[i]->begin(), gens_of[i]->end());
        seed.insert(seed.end(), gens_of[j]->begin(), gens_of[j]->end());
        std::sort(seed.begin(), seed.end());
        std::vector<Perm> jgens;
        std::vector<Perm> join = span_of(deg, seed, n, &jgens);
        if (found.emplace(std::move(join), std::move(jgens)).second) grew = true;
      }
  }

  std::vector<std::pair<std::vector<Perm>, std::vector<Perm>>> flat;
  for (auto& [e, gs] : found) flat.emplace_back(e, gs);
  std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  std::vector<Subgroup> out;
  for (const auto& [se, sg] : flat) out.push_back(Subgroup::from_elements(g, se, sg));
  {
    std::lock_guard<std::mutex> lock(normals_mu);
    normals_memo.emplace(key, NormalsEntry{elems, std::move(flat)});
  }
  return out;
}

// A maximal normal subgroup of g, tie-broken by seed and step. Above the
// lattice bound: quotient by any proper nontrivial class span and pull the
// maximal normal subgroup of the quotient back; the preimage is maximal in
// g by the correspondence theorem.
Subgroup maximal_normal_in(const Group& g, uint64_t seed, uint64_t step) {
  uint64_t n = g.order();
  if (n <= kLatticeBound) {
    std::vector<Subgroup> all = normal_subgroups(g);
    uint64_t best = 1;
    for (const Subgroup& s : all)
      if (s.order() < n) best = std::max(best, s.order());
    std::vector<const Subgroup*> ties;
    for (const Subgroup& s : all)
      if (s.order() == best) ties.push_back(&s);
    return *ties[pick_index(seed, step, ties.size())];
  }

  Point deg = g.degree();
  std::vector<Perm> best_span, best_gens;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0].is_identity()) continue;
    std::vector<Perm> gens;
    std::vector<Perm> span = span_of(deg, cls, n, &gens);
    if (span.size() == n) continue;
    if (span.size() > best_span.size()) {
      best_span = std::move(span);
      best_gens = std::move(gens);
    }
  }
  if (best_span.empty()) return Subgroup::trivial_of(g); // g is simple
  Subgroup probe = Subgroup::from_elements(g, std::move(best_span), std::move(best_gens));
  auto [q, pi] = quotient(g, probe);
  Subgroup mq = maximal_normal_in(q, seed, step);
  return pi.preimage_subgroup(mq);
}

SimpleType cyclic_type(uint64_t p) {
  SimpleType t;
  t.kind = SimpleType::Kind::Cyclic;
  t.param = p;
  t.order = p;
  t.fingerprint = {{1, 1}, {p, p - 1}};
  return t;
}

void cyclic_structural_series(const Group& g, uint64_t seed, Series& out) {
  uint64_t m = g.cyclic_modulus();
  uint64_t d = 1;
  for (uint64_t step = 0; m > 1; ++step) {
    auto fac = factorize(m);
    uint64_t p = fac[pick_index(seed, step, fac.size())].first;
    d *= p;
    m /= p;
    out.steps.push_back({Subgroup::cyclic_div(g, d), cyclic_type(p)});
  }
}

// Explicit cyclic groups descend through powers of a full-order witness;
// each <w^d> is the unique subgroup of its order.
void cyclic_explicit_series(const Group& g, const Perm& w, uint64_t seed, Series& out) {
  uint64_t m = g.order();
  Perm wd = w;
  for (uint64_t step = 0; m > 1; ++step) {
    auto fac = factorize(m);
    uint64_t p = fac[pick_index(seed, step, fac.size())].first;
    Perm next = wd;
    for (uint64_t k = 1; k < p; ++k) next = next * wd;
    wd = std::move(next);
    m /= p;
    std::vector<Perm> elems;
    elems.reserve(m);
    Perm cur = Perm::identity(g.degree());
    for (uint64_t k = 0; k < m; ++k) {
      elems.push_back(cur);
      cur = cur * wd;
    }
    std::sort(elems.begin(), elems.end());
    out.steps.push_back({Subgroup::from_elements(g, std::move(elems), {wd}), cyclic_type(p)});
  }
}

void product_series(const Group& g, uint64_t seed, Series& out) {
  const auto& parts = g.parts();
  uint64_t live = (uint64_t{1} << parts.size()) - 1;
  for (uint64_t step = 0; live; ++step) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < parts.size(); ++i)
      if (live >> i & 1) idx.push_back(i);
    size_t i = idx[pick_index(seed, step, idx.size())];
    live &= ~(uint64_t{1} << i);
    out.steps.push_back({Subgroup::product_mask(g, live), identify(parts[i])});
  }
}

} // namespace

std::vector<Subgroup> normal_subgroups(const Group& g) {
  switch (g.flavor()) {
  case Flavor::Cyclic: {
    uint64_t n = g.cyclic_modulus();
    std::vector<uint64_t> divs = {1};
    for (auto [p, e] : factorize(n)) {
      size_t base = divs.size();
      uint64_t pk = 1;
      for (uint32_t k = 0; k < e; ++k) {
        pk *= p;
        for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      }
    }
    // order ascending means divisor descending
    std::sort(divs.begin(), divs.end(), std::greater<>());
    std::vector<Subgroup> out;
    for (uint64_t d : divs) out.push_back(Subgroup::cyclic_div(g, d));
    return out;
  }
  case Flavor::Product:
    fail(errc::precondition, "normal subgroup lattice needs an enumerable group; materialize first");
  case Flavor::Explicit:
    break;
  }
  if (g.order() > kLatticeBound)
    fail(errc::bound_exceeded,
         "normal subgroup lattice capped at order " + std::to_string(kLatticeBound));
  return normal_subgroups_explicit(g);
}

Series composition_series(const Group& g, uint64_t seed) {
  Series out{g, {}};
  switch (g.flavor()) {
  case Flavor::Cyclic:
    cyclic_structural_series(g, seed, out);
    return out;
  case Flavor::Product: {
    for (const Group& p : g.parts())
      if (!is_simple(p)) {
        // Mask descent needs simple coordinates; fall back to enumeration.
        if (!g.materializable())
          fail(errc::bound_exceeded, "product with non-simple parts beyond enumeration");
        return composition_series(g.materialize(), seed);
      }
    product_series(g, seed, out);
    return out;
  }
  case Flavor::Explicit:
    break;
  }

  if (g.order() > 1) {
    if (auto w = full_order_element(g)) {
      cyclic_explicit_series(g, *w, seed, out);
      return out;
    }
  }

  Group cur = g;
  for (uint64_t step = 0; cur.order() > 1; ++step) {
    Subgroup nsub = maximal_normal_in(cur, seed, step);
    auto [q, pi] = quotient(cur, nsub);
    SimpleType factor = identify(q);
    out.steps.push_back({Subgroup::from_elements(g, nsub.elements(), nsub.gens()), factor});
    cur = nsub.as_group();
  }
  return out;
}

FactorMultiset factors_of(const Series& s) {
  FactorMultiset m;
  for (const SeriesStep& st : s.steps) ++m[st.factor];
  return m;
}

FactorMultiset factor_multiset(const Group& g) { return factors_of(composition_series(g, 0)); }

uint64_t n_count(const FactorMultiset& m, const SimpleType& s) {
  uint64_t total = 0;
  for (const auto& [t, c] : m)
    if (same_type(t, s)) total += c;
  return total;
}

uint64_t n_count(const Group& g, const SimpleType& s) { return n_count(factor_multiset(g), s); }

JhOutcome jh_verify(const Group& g, uint64_t trials, uint64_t base_seed) {
  if (trials < 2) fail(errc::precondition, "jh_verify needs at least 2 trials");
  JhOutcome out;
  out.order = g.order();
  out.pass = true;
  std::set<std::vector<uint64_t>> chains;
  for (uint64_t t = 0; t < trials; ++t) {
    Series s = composition_series(g, base_seed + t);
    FactorMultiset m = factors_of(s);
    std::vector<uint64_t> chain;
    for (const SeriesStep& st : s.steps) chain.push_back(st.subgroup.content_key());
    chains.insert(std::move(chain));
    if (t == 0)
      out.factors = std::move(m);
    else if (m != out.factors)
      out.pass = false;
  }
  out.chains_found = chains.size();
  return out;
}

bool is_solvable(const Group& g) {
  for (const auto& [t, c] : factor_multiset(g))
    if (t.kind != SimpleType::Kind::Cyclic) return false;
  return true;
}

std::vector<uint64_t> radical_witness(const Group& g) {
  std::vector<uint64_t> primes;
  for (const SeriesStep& st : composition_series(g, 0).steps) {
    if (st.factor.kind != SimpleType::Kind::Cyclic)
      fail(errc::not_solvable, "nonabelian composition factor " + st.factor.label());
    primes.push_back(st.factor.param);
  }
  return primes;
}

} // namespace pfg
