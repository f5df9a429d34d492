#pragma once

#include <cstdint>

namespace pfg {

// splitmix64: tiny, fully specified, identical on every platform. All
// seed-controlled behavior in the library goes through this so that reports
// are byte-stable across runs and machines.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n), n > 0. Multiply-shift reduction; the modulo
  // bias is irrelevant at the group orders we deal with.
  uint64_t below(uint64_t n) { return next() % n; }

private:
  uint64_t state_;
};

inline uint64_t mix64(uint64_t a, uint64_t b) {
  Rng r(a ^ (b * 0x9e3779b97f4a7c15ULL) ^ 0x5851f42d4c957f2dULL);
  return r.next();
}

} // namespace pfg
