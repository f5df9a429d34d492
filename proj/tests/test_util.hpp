#pragma once

#include <doctest.h>

#include "error.hpp"
#include "perm.hpp"
#include "rng.hpp"

namespace pfg::test {

// Runs f, which must throw a pfg::Error, and hands back its code.
template <class F> errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a pfg::Error");
  return errc::parse;
}

inline Perm random_perm(Point degree, Rng& rng) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  for (Point i = degree; i > 1; --i) {
    uint64_t j = rng.below(i);
    std::swap(img[i - 1], img[j]);
  }
  return Perm(std::move(img));
}

} // namespace pfg::test
