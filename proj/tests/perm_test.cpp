#include <doctest.h>

#include "perm.hpp"
#include "test_util.hpp"

using namespace pfg;
using pfg::test::code_of;

TEST_CASE("cycle notation parses to the expected images") {
  Perm p = Perm::from_cycles("(0 1)(2 3)", 4);
  CHECK(p.images() == std::vector<Point>{1, 0, 3, 2});

  Perm q = Perm::from_cycles("(0 2 1)", 4);
  CHECK(q[0] == 2);
  CHECK(q[2] == 1);
  CHECK(q[1] == 0);
  CHECK(q[3] == 3);

  CHECK(Perm::from_cycles("()", 3) == Perm::identity(3));
  CHECK(Perm::from_cycles("  (1 2) ", 3) == Perm::from_cycles("(1 2)", 3));
  CHECK(Perm::from_cycles("(1, 2)", 3) == Perm::from_cycles("(1 2)", 3));
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK(code_of([] { Perm::from_cycles("(0 1", 4); }) == errc::parse);
  CHECK(code_of([] { Perm::from_cycles("(0 0)", 4); }) == errc::parse);
  CHECK(code_of([] { Perm::from_cycles("(0 9)", 4); }) == errc::parse);
  CHECK(code_of([] { Perm::from_cycles("0 1)", 4); }) == errc::parse);
  CHECK(code_of([] { Perm::from_cycles("(0 x)", 4); }) == errc::parse);
  CHECK(code_of([] { Perm(std::vector<Point>{0, 0}); }) == errc::parse);
  CHECK(code_of([] { Perm(std::vector<Point>{1, 2}); }) == errc::parse);
}

TEST_CASE("composition applies the right factor first") {
  Perm a = Perm::from_cycles("(0 1 2)", 3);
  Perm b = Perm::from_cycles("(0 1)", 3);
  // (a*b)(p) = a(b(p)): 0 -> 1 -> 2, so a*b swaps 0 and 2.
  CHECK(a * b == Perm::from_cycles("(0 2)", 3));
  CHECK(b * a == Perm::from_cycles("(1 2)", 3));
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(Perm::identity(5).order() == 1);
  CHECK(Perm::from_cycles("(0 1)", 5).order() == 2);
  CHECK(Perm::from_cycles("(0 1 2)(3 4)", 5).order() == 6);
  CHECK(Perm::from_cycles("(0 1 2 3)(4 5)", 6).order() == 4);
}

TEST_CASE("inverse composes to the identity") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Perm p = pfg::test::random_perm(8, rng);
    CHECK(p * p.inverse() == Perm::identity(8));
    CHECK(p.inverse() * p == Perm::identity(8));
  }
}

TEST_CASE("cycle text round-trips") {
  CHECK(Perm::identity(4).to_cycles() == "()");
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Perm p = pfg::test::random_perm(9, rng);
    CHECK(Perm::from_cycles(p.to_cycles(), 9) == p);
  }
}

TEST_CASE("comparison is lexicographic on images") {
  CHECK(Perm::identity(3) < Perm::from_cycles("(0 1)", 3));
  CHECK(Perm::from_cycles("(1 2)", 3) < Perm::from_cycles("(0 1)", 3));
  Perm p = Perm::from_cycles("(0 1)", 3);
  CHECK(p.hash() == Perm::from_cycles("(0 1)", 3).hash());
}
