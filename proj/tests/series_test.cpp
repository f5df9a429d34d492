#include <doctest.h>
#include <set>

#include "series.hpp"
#include "test_util.hpp"

using namespace pfg;
using pfg::test::code_of;

namespace {

// Independent subgroup enumeration: grow every subgroup by one element at a
// time until nothing new appears. Exponential in principle, fine here.
std::vector<std::vector<Perm>> all_subgroups_oracle(const Group& g) {
  std::set<std::vector<Perm>> seen;
  seen.insert({Perm::identity(g.degree())});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Perm>> snapshot(seen.begin(), seen.end());
    for (const auto& h : snapshot)
      for (const Perm& x : g.elements()) {
        std::vector<Perm> gens = h;
        gens.push_back(x);
        std::sort(gens.begin(), gens.end());
        if (seen.insert(closure(g.degree(), gens, g.order())).second) grew = true;
      }
  }
  return {seen.begin(), seen.end()};
}

bool normal_oracle(const Group& g, const std::vector<Perm>& h) {
  for (const Perm& x : g.elements()) {
    Perm xi = x.inverse();
    for (const Perm& s : h)
      if (!std::binary_search(h.begin(), h.end(), xi * s * x)) return false;
  }
  return true;
}

bool solvable_oracle(const Group& g) {
  Group cur = g;
  while (cur.order() > 1) {
    Subgroup d = derived_subgroup(cur);
    if (d.order() == cur.order()) return false;
    cur = d.as_group();
  }
  return true;
}

uint64_t factor_order_product(const Series& s) {
  uint64_t prod = 1;
  for (const auto& st : s.steps) prod *= st.factor.order;
  return prod;
}

FactorMultiset multiset_sum(FactorMultiset a, const FactorMultiset& b) {
  for (const auto& [t, c] : b) a[t] += c;
  return a;
}

std::map<std::string, uint64_t> by_label(const FactorMultiset& m) {
  std::map<std::string, uint64_t> out;
  for (const auto& [t, c] : m) out[t.label()] += c;
  return out;
}

} // namespace

TEST_CASE("normal subgroup lattice matches the brute-force oracle") {
  Group q8 = Group::from_generators(
      8, {Perm::from_cycles("(0 2 1 3)(4 6 5 7)", 8), Perm::from_cycles("(0 4 1 5)(2 7 3 6)", 8)});
  for (Group g : {Group::symmetric(3), Group::symmetric(4), Group::alternating(4),
                  Group::dihedral(4), Group::dihedral(6), Group::cyclic_explicit(12), q8}) {
    auto oracle = all_subgroups_oracle(g);
    std::set<std::vector<Perm>> expected;
    for (const auto& h : oracle)
      if (normal_oracle(g, h)) expected.insert(h);
    std::set<std::vector<Perm>> got;
    for (const Subgroup& s : normal_subgroups(g)) got.insert(s.elements());
    CHECK(got == expected);
  }
}

TEST_CASE("normal subgroups come sorted by order") {
  std::vector<uint64_t> orders;
  for (const Subgroup& s : normal_subgroups(Group::symmetric(4))) orders.push_back(s.order());
  CHECK(orders == std::vector<uint64_t>{1, 4, 12, 24});

  orders.clear();
  for (const Subgroup& s : normal_subgroups(Group::alternating(5))) orders.push_back(s.order());
  CHECK(orders == std::vector<uint64_t>{1, 60});

  orders.clear();
  for (const Subgroup& s : normal_subgroups(Group::cyclic(6))) orders.push_back(s.order());
  CHECK(orders == std::vector<uint64_t>{1, 2, 3, 6});
}

TEST_CASE("normal subgroup lattice respects its bound") {
  Group big = Group::direct_product(
      {Group::alternating(5), Group::alternating(5), Group::cyclic_explicit(2)});
  CHECK(code_of([&] { normal_subgroups(big); }) == errc::bound_exceeded);
}

TEST_CASE("S4 descends through its unique chief chain") {
  for (uint64_t seed : {0u, 1u, 7u}) {
    Series s = composition_series(Group::symmetric(4), seed);
    std::vector<uint64_t> orders;
    for (const auto& st : s.steps) orders.push_back(st.subgroup.order());
    CHECK(orders == std::vector<uint64_t>{12, 4, 2, 1});
    CHECK(by_label(factors_of(s)) == std::map<std::string, uint64_t>{{"C2", 3}, {"C3", 1}});
  }
}

TEST_CASE("a simple group has a length one series") {
  Series s = composition_series(Group::cyclic_explicit(7), 3);
  REQUIRE(s.steps.size() == 1);
  CHECK(s.steps[0].subgroup.order() == 1);
  CHECK(s.steps[0].factor.label() == "C7");

  Series a5 = composition_series(Group::alternating(5), 0);
  REQUIRE(a5.steps.size() == 1);
  CHECK(a5.steps[0].factor.label() == "A5");
}

TEST_CASE("V4 shows all three chains on consecutive seeds") {
  Group v4 = Group::direct_product({Group::cyclic_explicit(2), Group::cyclic_explicit(2)});
  std::set<uint64_t> middles;
  for (uint64_t seed : {0u, 1u, 2u}) {
    Series s = composition_series(v4, seed);
    REQUIRE(s.steps.size() == 2);
    middles.insert(s.steps[0].subgroup.content_key());
    CHECK(by_label(factors_of(s)) == std::map<std::string, uint64_t>{{"C2", 2}});
  }
  CHECK(middles.size() == 3);
}

TEST_CASE("series steps stay normal in their predecessor") {
  Rng rng(17);
  for (Group g : {Group::symmetric(4), Group::dihedral(6), Group::sl2(5),
                  Group::direct_product({Group::symmetric(3), Group::symmetric(3)})}) {
    Series s = composition_series(g, rng.next());
    const Series& cs = s;
    std::vector<Perm> prev = g.elements();
    for (const auto& st : cs.steps) {
      const auto& cur = st.subgroup.elements();
      for (const Perm& x : cur) CHECK(std::binary_search(prev.begin(), prev.end(), x));
      // conjugation of the step by the predecessor stays inside the step
      for (const Perm& a : prev) {
        Perm ai = a.inverse();
        bool ok = true;
        for (const Perm& s2 : st.subgroup.gens())
          ok = ok && std::binary_search(cur.begin(), cur.end(), ai * s2 * a);
        CHECK(ok);
        if (!ok) break;
      }
      prev = cur;
    }
  }
}

TEST_CASE("factor multisets are frozen for the reference groups") {
  CHECK(by_label(factor_multiset(Group::symmetric(4))) ==
        std::map<std::string, uint64_t>{{"C2", 3}, {"C3", 1}});
  CHECK(by_label(factor_multiset(Group::sl2(5))) ==
        std::map<std::string, uint64_t>{{"C2", 1}, {"A5", 1}});
  CHECK(by_label(factor_multiset(Group::cyclic_explicit(720))) ==
        std::map<std::string, uint64_t>{{"C2", 4}, {"C3", 2}, {"C5", 1}});
  CHECK(by_label(factor_multiset(Group::cyclic(720))) ==
        std::map<std::string, uint64_t>{{"C2", 4}, {"C3", 2}, {"C5", 1}});
  CHECK(factor_multiset(Group::trivial()).empty());
  CHECK(by_label(factor_multiset(Group::psl2(7))) ==
        std::map<std::string, uint64_t>{{"PSL2(7)", 1}});
}

TEST_CASE("factor order products recover the group order") {
  Rng rng(23);
  for (Group g : {Group::symmetric(5), Group::symmetric(6), Group::alternating(6),
                  Group::dihedral(12), Group::sl2(5), Group::psl2(7),
                  Group::cyclic_explicit(100), Group::cyclic(15625)}) {
    for (int t = 0; t < 3; ++t) {
      Series s = composition_series(g, rng.next());
      CHECK(factor_order_product(s) == g.order());
    }
  }
}

TEST_CASE("quotient consistency splits multisets over normal subgroups") {
  for (Group g : {Group::symmetric(4), Group::dihedral(6), Group::sl2(5)}) {
    for (const Subgroup& nsub : normal_subgroups(g)) {
      if (nsub.order() == 1 || nsub.order() == g.order()) continue;
      auto [q, pi] = quotient(g, nsub);
      FactorMultiset split = multiset_sum(factor_multiset(nsub.as_group()), factor_multiset(q));
      CHECK(by_label(split) == by_label(factor_multiset(g)));
    }
  }
}

TEST_CASE("structural series agree with materialized series") {
  Group structural = Group::cyclic(360);
  Group flat = Group::cyclic_explicit(360);
  CHECK(by_label(factor_multiset(structural)) == by_label(factor_multiset(flat)));

  Group prod = Group::structural_product({Group::alternating(5), Group::psl2(7)});
  CHECK(by_label(factor_multiset(prod)) ==
        std::map<std::string, uint64_t>{{"A5", 1}, {"PSL2(7)", 1}});
  CHECK(by_label(factor_multiset(prod.materialize())) == by_label(factor_multiset(prod)));
}

TEST_CASE("probe path handles groups past the lattice bound") {
  Group big = Group::direct_product(
      {Group::alternating(5), Group::alternating(5), Group::cyclic_explicit(2)});
  REQUIRE(big.order() == 7200);
  JhOutcome r = jh_verify(big, 5, 0);
  CHECK(r.pass);
  CHECK(by_label(r.factors) == std::map<std::string, uint64_t>{{"C2", 1}, {"A5", 2}});
}

TEST_CASE("n_count matches the frozen multiplicities") {
  SimpleType c2 = identify(Group::cyclic(2));
  CHECK(n_count(Group::symmetric(4), c2) == 3);
  CHECK(n_count(Group::alternating(5), c2) == 0);
  CHECK(n_count(Group::cyclic_explicit(8), c2) == 3);
  CHECK(n_count(Group::sl2(5), identify(Group::psl2(5))) == 1);
}

TEST_CASE("jh_verify reports the spec examples") {
  Group v4 = Group::direct_product({Group::cyclic_explicit(2), Group::cyclic_explicit(2)});
  JhOutcome a = jh_verify(v4, 10, 0);
  CHECK(a.pass);
  CHECK(a.chains_found == 3);
  CHECK(by_label(a.factors) == std::map<std::string, uint64_t>{{"C2", 2}});

  JhOutcome b = jh_verify(Group::symmetric(4), 10, 0);
  CHECK(b.pass);
  CHECK(by_label(b.factors) == std::map<std::string, uint64_t>{{"C2", 3}, {"C3", 1}});

  JhOutcome c = jh_verify(Group::dihedral(6), 20, 0);
  CHECK(c.pass);
  CHECK(by_label(c.factors) == std::map<std::string, uint64_t>{{"C2", 2}, {"C3", 1}});

  CHECK(code_of([&] { jh_verify(v4, 1, 0); }) == errc::precondition);
}

TEST_CASE("solvability matches the derived series oracle") {
  Group q8 = Group::from_generators(
      8, {Perm::from_cycles("(0 2 1 3)(4 6 5 7)", 8), Perm::from_cycles("(0 4 1 5)(2 7 3 6)", 8)});
  for (Group g : {Group::symmetric(4), Group::symmetric(5), Group::alternating(4),
                  Group::alternating(5), Group::sl2(5), Group::psl2(7), Group::dihedral(12),
                  Group::cyclic_explicit(30), q8,
                  Group::direct_product({Group::alternating(5), Group::cyclic_explicit(2)})}) {
    CHECK(is_solvable(g) == solvable_oracle(g));
  }
  CHECK(is_solvable(Group::trivial()));
  CHECK(is_solvable(Group::cyclic(15625)));
}

TEST_CASE("radical witness lists prime degrees in series order") {
  CHECK(radical_witness(Group::symmetric(4)) == std::vector<uint64_t>{2, 3, 2, 2});
  CHECK(radical_witness(Group::cyclic(13)) == std::vector<uint64_t>{13});
  CHECK(radical_witness(Group::trivial()).empty());
  CHECK(code_of([] { radical_witness(Group::alternating(5)); }) == errc::not_solvable);
  auto w = radical_witness(Group::cyclic_explicit(720));
  std::multiset<uint64_t> ws(w.begin(), w.end());
  CHECK(ws == std::multiset<uint64_t>{2, 2, 2, 2, 3, 3, 5});
}

TEST_CASE("n_S never grows when passing to a quotient") {
  Group g = Group::symmetric(4);
  FactorMultiset whole = factor_multiset(g);
  for (const Subgroup& nsub : normal_subgroups(g)) {
    if (nsub.order() == g.order()) continue;
    auto [q, pi] = quotient(g, nsub);
    if (q.order() == 1) continue;
    for (const auto& [t, c] : factor_multiset(q)) CHECK(c <= n_count(whole, t));
  }
}
