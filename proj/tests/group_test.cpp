#include <algorithm>
#include <doctest.h>
#include <set>

#include "group.hpp"
#include "test_util.hpp"

using namespace pfg;
using pfg::test::code_of;

namespace {

// Independent closure oracle: saturate under all pairwise products instead
// of BFS over generator edges.
std::vector<Perm> closure_oracle(Point degree, const std::vector<Perm>& gens) {
  std::set<Perm> acc;
  acc.insert(Perm::identity(degree));
  for (const Perm& g : gens) acc.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(acc.begin(), acc.end());
    for (const Perm& a : snapshot)
      for (const Perm& b : snapshot)
        if (acc.insert(a * b).second) grew = true;
  }
  return {acc.begin(), acc.end()};
}

} // namespace

TEST_CASE("closure agrees with the pairwise-product oracle") {
  std::vector<std::vector<Perm>> cases = {
      {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1 2 3)", 4)},
      {Perm::from_cycles("(0 1 2)", 5), Perm::from_cycles("(2 3 4)", 5)},
      {Perm::from_cycles("(0 1)(2 3)", 4), Perm::from_cycles("(0 2)(1 3)", 4)},
      {Perm::from_cycles("(0 1 2 3 4)", 5)},
  };
  for (const auto& gens : cases) {
    Point deg = gens[0].degree();
    CHECK(closure(deg, gens, kMaxOrder) == closure_oracle(deg, gens));
  }
}

TEST_CASE("builtin families have the expected orders") {
  CHECK(Group::symmetric(4).order() == 24);
  CHECK(Group::symmetric(6).order() == 720);
  CHECK(Group::alternating(4).order() == 12);
  CHECK(Group::alternating(5).order() == 60);
  CHECK(Group::alternating(6).order() == 360);
  CHECK(Group::dihedral(3).order() == 6);
  CHECK(Group::dihedral(4).order() == 8);
  CHECK(Group::dihedral(12).order() == 24);
  CHECK(Group::sl2(5).order() == 120);
  CHECK(Group::sl2(3).order() == 24);
  CHECK(Group::psl2(5).order() == 60);
  CHECK(Group::psl2(7).order() == 168);
  CHECK(Group::psl2(11).order() == 660);
  CHECK(Group::psl2(13).order() == 1092);
  CHECK(Group::cyclic_explicit(12).order() == 12);
  CHECK(Group::trivial().order() == 1);
}

TEST_CASE("structural groups answer order without enumerating") {
  Group big = Group::cyclic(uint64_t{5} * 5 * 5 * 5 * 5 * 5 * 5 * 5);
  CHECK(big.order() == 390625);
  CHECK(big.flavor() == Flavor::Cyclic);
  CHECK_FALSE(big.materializable());

  Group small = Group::cyclic(3125);
  CHECK(small.materializable());
  CHECK(small.materialize().order() == 3125);

  Group prod = Group::structural_product({Group::alternating(5), Group::psl2(7)});
  CHECK(prod.order() == 60 * 168);
  CHECK(prod.parts().size() == 2);
  CHECK(prod.materializable());
  CHECK(prod.materialize().order() == 60 * 168);
}

TEST_CASE("direct product embeds parts blockwise") {
  Group g = Group::direct_product({Group::symmetric(3), Group::cyclic_explicit(2)});
  CHECK(g.order() == 12);
  CHECK(g.degree() == 5);
  for (const Perm& gen : g.generators()) {
    bool moves_left = false, moves_right = false;
    for (Point p = 0; p < 3; ++p) moves_left |= gen[p] != p;
    for (Point p = 3; p < 5; ++p) moves_right |= gen[p] != p;
    CHECK_FALSE((moves_left && moves_right));
  }
}

TEST_CASE("enumeration out of bounds is reported") {
  CHECK(code_of([] { Group::symmetric(9).order(); }) == errc::bound_exceeded);
  CHECK(code_of([] { Group::cyclic(1u << 20).materialize(); }) == errc::bound_exceeded);
}

TEST_CASE("conjugacy classes of S4 have the textbook sizes") {
  auto classes = conjugacy_classes(Group::symmetric(4));
  std::vector<size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("normal closures in S4") {
  Group s4 = Group::symmetric(4);
  CHECK(normal_closure(s4, {Perm::from_cycles("(0 1)", 4)}).order() == 24);
  CHECK(normal_closure(s4, {Perm::from_cycles("(0 1)(2 3)", 4)}).order() == 4);
  CHECK(normal_closure(s4, {Perm::from_cycles("(0 1 2)", 4)}).order() == 12);
}

TEST_CASE("derived subgroups walk the solvable chain") {
  CHECK(derived_subgroup(Group::symmetric(4)).order() == 12);
  CHECK(derived_subgroup(Group::alternating(4)).order() == 4);
  CHECK(derived_subgroup(Group::symmetric(5)).order() == 60);
  CHECK(derived_subgroup(Group::alternating(5)).order() == 60);
  CHECK(derived_subgroup(Group::cyclic_explicit(12)).order() == 1);
  CHECK(derived_subgroup(Group::sl2(5)).order() == 120);
}

TEST_CASE("simplicity by class sweep") {
  CHECK(is_simple(Group::alternating(5)));
  CHECK(is_simple(Group::alternating(6)));
  CHECK(is_simple(Group::psl2(7)));
  CHECK(is_simple(Group::cyclic_explicit(7)));
  CHECK_FALSE(is_simple(Group::alternating(4)));
  CHECK_FALSE(is_simple(Group::symmetric(4)));
  CHECK_FALSE(is_simple(Group::sl2(5)));
  CHECK_FALSE(is_simple(Group::cyclic_explicit(6)));
  CHECK(is_simple(Group::cyclic(7)));
  CHECK_FALSE(is_simple(Group::cyclic(9)));
  CHECK(code_of([] { is_simple(Group::trivial()); }) == errc::trivial_group);
}

TEST_CASE("full order element finds cyclic structure and nothing else") {
  Group c12 = Group::cyclic_explicit(12);
  auto w = full_order_element(c12);
  REQUIRE(w.has_value());
  CHECK(w->order() == 12);

  CHECK_FALSE(full_order_element(Group::symmetric(3)).has_value());
  Group v4 = Group::direct_product({Group::cyclic_explicit(2), Group::cyclic_explicit(2)});
  CHECK_FALSE(full_order_element(v4).has_value());
}

TEST_CASE("small generating sets regenerate the group") {
  for (Group g : {Group::symmetric(4), Group::alternating(5), Group::dihedral(6),
                  Group::cyclic_explicit(12)}) {
    auto gens = small_generating_set(g.degree(), g.elements());
    CHECK(gens.size() <= 4);
    CHECK(closure(g.degree(), gens, kMaxOrder) == g.elements());
  }
}

TEST_CASE("cyclic divisor subgroups") {
  Group c12 = Group::cyclic(12);
  Subgroup h = Subgroup::cyclic_div(c12, 3);
  CHECK(h.order() == 4);
  CHECK(h.is_normal_in_parent());
  CHECK(Subgroup::whole(c12).order() == 12);
  CHECK(Subgroup::trivial_of(c12).order() == 1);
  CHECK(code_of([&] { Subgroup::cyclic_div(c12, 5); }) == errc::precondition);
}

TEST_CASE("product mask subgroups") {
  Group p = Group::structural_product({Group::alternating(5), Group::psl2(7)});
  CHECK(Subgroup::product_mask(p, 0b01).order() == 60);
  CHECK(Subgroup::product_mask(p, 0b10).order() == 168);
  CHECK(Subgroup::product_mask(p, 0b11).order() == 60 * 168);
  CHECK(Subgroup::product_mask(p, 0b10).is_normal_in_parent());
}

TEST_CASE("subgroup content keys separate the V4 lines") {
  Group v4 = Group::direct_product({Group::cyclic_explicit(2), Group::cyclic_explicit(2)});
  std::set<uint64_t> keys;
  for (const Perm& x : v4.elements()) {
    if (x.is_identity()) continue;
    keys.insert(Subgroup::generated(v4, {x}).content_key());
  }
  CHECK(keys.size() == 3);
}

TEST_CASE("normality check sees non-normal subgroups") {
  Group s4 = Group::symmetric(4);
  Subgroup h = Subgroup::generated(s4, {Perm::from_cycles("(0 1)", 4)});
  CHECK_FALSE(h.is_normal_in_parent());
  Subgroup a4 = Subgroup::generated(
      s4, {Perm::from_cycles("(0 1 2)", 4), Perm::from_cycles("(1 2 3)", 4)});
  CHECK(a4.order() == 12);
  CHECK(a4.is_normal_in_parent());
}

TEST_CASE("factorize returns prime powers in order") {
  using V = std::vector<std::pair<uint64_t, uint32_t>>;
  CHECK(factorize(720) == V{{2, 4}, {3, 2}, {5, 1}});
  CHECK(factorize(1) == V{});
  CHECK(factorize(13) == V{{13, 1}});
  CHECK(factorize(1024) == V{{2, 10}});
}
