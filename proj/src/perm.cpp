#include "perm.hpp"

#include <numeric>
#include <sstream>

#include "error.hpp"

namespace pfg {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      fail(errc::parse, "image sequence is not a bijection of {0.." +
                            std::to_string(images_.size() ? images_.size() - 1 : 0) + "}");
    seen[img] = true;
  }
}

Perm Perm::identity(Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

uint64_t Perm::order() const {
  uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    uint64_t len = 0;
    Point p = start;
    while (!seen[p]) {
      seen[p] = true;
      p = images_[p];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<Point> images(b.images_.size());
  for (Point i = 0; i < b.degree(); ++i) images[i] = a.images_[b.images_[i]];
  return Perm(std::move(images));
}

size_t Perm::hash() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (Point img : images_) {
    h ^= img;
    h *= 0x100000001b3ULL;
  }
  return static_cast<size_t>(h);
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    any = true;
    out << '(';
    Point p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
      p = images_[p];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm Perm::from_cycles(const std::string& text, Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(errc::parse, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        fail(errc::parse, "expected point or ')' in cycle notation: " + text);
      uint64_t value = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<uint64_t>(text[i] - '0');
        if (value > 0xffffffffULL) fail(errc::parse, "point out of range: " + text);
        ++i;
      }
      if (value >= degree)
        fail(errc::parse, "point " + std::to_string(value) + " exceeds degree " +
                              std::to_string(degree));
      Point p = static_cast<Point>(value);
      if (used[p]) fail(errc::parse, "point " + std::to_string(p) + " repeated: " + text);
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i; // tolerate comma separators
        skip_ws();
      }
    }
    if (i >= text.size()) fail(errc::parse, "unterminated cycle: " + text);
    ++i; // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(images));
}

} // namespace pfg
