#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pfg {

using Point = uint32_t;

/// A permutation of {0..degree-1}, stored as its image sequence:
/// images[i] is where point i goes. Composition is right-to-left,
/// (a * b)[p] = a[b[p]].
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(Point degree);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  uint64_t order() const; // lcm of cycle lengths

  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm&) const = default;
  // Lexicographic on image sequences; the fixed total order used for
  // canonical element ordering and coset labels everywhere.
  std::strong_ordering operator<=>(const Perm& other) const {
    return images_ <=> other.images_;
  }

  size_t hash() const;

  std::string to_cycles() const; // "(0 1)(2 3)", identity is "()"
  static Perm from_cycles(const std::string& text, Point degree);

private:
  std::vector<Point> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

} // namespace pfg
