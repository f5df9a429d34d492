#include "group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "error.hpp"
#include "rng.hpp"

namespace pfg {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > ~uint64_t{0}) fail(errc::bound_exceeded, "group order overflows 64 bits");
  return static_cast<uint64_t>(r);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Perm> closure(Point degree, const std::vector<Perm>& gens, uint64_t bound) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> work;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Perm x = std::move(work.front());
    work.pop_front();
    for (const Perm& g : gens) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > bound)
          fail(errc::bound_exceeded,
               "closure exceeds bound " + std::to_string(bound));
        work.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool sorted_contains(const std::vector<Perm>& sorted, const Perm& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

} // namespace

std::vector<Perm> span_of(Point degree, const std::vector<Perm>& sorted_seed, uint64_t bound,
                          std::vector<Perm>* gens_out) {
  std::vector<Perm> gens;
  std::vector<Perm> have = {Perm::identity(degree)};
  for (const Perm& x : sorted_seed) {
    if (sorted_contains(have, x)) continue;
    gens.push_back(x);
    have = closure(degree, gens, bound);
  }
  if (gens_out) *gens_out = std::move(gens);
  return have;
}

// Greedy scan in canonical order, keeping an element whenever it falls
// outside the closure so far.
std::vector<Perm> small_generating_set(Point degree, const std::vector<Perm>& sorted_elements) {
  std::vector<Perm> gens;
  span_of(degree, sorted_elements, sorted_elements.size(), &gens);
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return gens;
}

struct Group::Rep {
  Flavor flavor = Flavor::Explicit;
  Point degree = 1;

  // Explicit
  std::vector<Perm> gens;
  mutable std::vector<Perm> elements;
  mutable bool enumerated = false;
  mutable std::mutex lock;

  // Cyclic
  uint64_t modulus = 1;

  // Product
  std::vector<Group> parts;
  uint64_t product_order = 1;

  void ensure_enumerated() const {
    std::lock_guard<std::mutex> g(lock);
    if (enumerated) return;
    elements = closure(degree, gens, kMaxOrder);
    enumerated = true;
  }
};

Group Group::from_generators(Point degree, std::vector<Perm> generators) {
  if (generators.empty()) fail(errc::precondition, "empty generator list");
  for (const Perm& g : generators)
    if (g.degree() != degree) fail(errc::precondition, "generator degree mismatch");
  auto rep = std::make_shared<Rep>();
  rep->degree = degree;
  rep->gens = std::move(generators);
  return Group(std::move(rep));
}

Group Group::from_elements(Point degree, std::vector<Perm> generators,
                           std::vector<Perm> elements) {
  if (generators.empty()) generators.push_back(Perm::identity(degree));
  auto rep = std::make_shared<Rep>();
  rep->degree = degree;
  rep->gens = std::move(generators);
  std::sort(elements.begin(), elements.end());
  rep->elements = std::move(elements);
  rep->enumerated = true;
  return Group(std::move(rep));
}

Group Group::trivial(Point degree) {
  return from_elements(degree, {Perm::identity(degree)}, {Perm::identity(degree)});
}

Group Group::cyclic(uint64_t n) {
  if (n == 0) fail(errc::precondition, "cyclic group of order 0");
  auto rep = std::make_shared<Rep>();
  rep->flavor = Flavor::Cyclic;
  rep->modulus = n;
  // Conceptual rotation degree; only consulted when materialization is legal.
  rep->degree = n <= 0xffffffffULL ? static_cast<Point>(n) : 0;
  return Group(std::move(rep));
}

Group Group::cyclic_explicit(uint64_t n) {
  if (n == 0) fail(errc::precondition, "cyclic group of order 0");
  if (n > kMaxOrder || n * n > kMaxCells)
    fail(errc::bound_exceeded, "cyclic group too large to materialize: " + std::to_string(n));
  Point deg = static_cast<Point>(n);
  std::vector<Perm> elements;
  elements.reserve(n);
  for (uint64_t k = 0; k < n; ++k) {
    std::vector<Point> images(deg);
    for (uint64_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + k) % n);
    elements.emplace_back(std::move(images));
  }
  std::vector<Perm> gens = {n > 1 ? elements[1] : elements[0]};
  return from_elements(deg, std::move(gens), std::move(elements));
}

Group Group::symmetric(uint32_t n) {
  if (n <= 1) return trivial(n == 0 ? 1 : n);
  Point deg = n;
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles("(0 1)", deg));
  if (n >= 3) {
    std::string cyc = "(";
    for (uint32_t i = 0; i < n; ++i) cyc += (i ? " " : "") + std::to_string(i);
    cyc += ")";
    gens.push_back(Perm::from_cycles(cyc, deg));
  }
  return from_generators(deg, std::move(gens));
}

Group Group::alternating(uint32_t n) {
  if (n <= 2) return trivial(n == 0 ? 1 : n);
  Point deg = n;
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles("(0 1 2)", deg));
  if (n >= 4) {
    // n odd: the n-cycle is even; n even: the (n-1)-cycle on 1..n-1 is even.
    uint32_t start = (n % 2) ? 0 : 1;
    std::string cyc = "(";
    for (uint32_t i = start; i < n; ++i) cyc += (i > start ? " " : "") + std::to_string(i);
    cyc += ")";
    gens.push_back(Perm::from_cycles(cyc, deg));
  }
  return from_generators(deg, std::move(gens));
}

Group Group::dihedral(uint32_t n) {
  if (n < 3) fail(errc::precondition, "dihedral requires n >= 3");
  Point deg = n;
  std::vector<Point> rot(deg), flip(deg);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return from_generators(deg, {Perm(std::move(rot)), Perm(std::move(flip))});
}

Group Group::sl2(uint32_t q) {
  if (!is_prime(q) || q > 13) fail(errc::precondition, "sl2 requires prime q <= 13");
  Point deg = q * q - 1;
  auto index = [q](uint32_t a, uint32_t b) -> Point { return a * q + b - 1; };
  std::vector<Point> e12(deg), e21(deg);
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      e12[index(a, b)] = index((a + b) % q, b);
      e21[index(a, b)] = index(a, (a + b) % q);
    }
  return from_generators(deg, {Perm(std::move(e12)), Perm(std::move(e21))});
}

Group Group::psl2(uint32_t q) {
  if (!is_prime(q) || q < 5 || q > 13)
    fail(errc::precondition, "psl2 reference requires odd prime 5 <= q <= 13");
  // Points 0..q-1 are the field, q is infinity; generators x+1 and -1/x.
  Point deg = q + 1;
  std::vector<Point> t(deg), s(deg);
  t[q] = q;
  for (uint32_t x = 0; x < q; ++x) t[x] = (x + 1) % q;
  s[0] = q;
  s[q] = 0;
  for (uint32_t x = 1; x < q; ++x)
    s[x] = static_cast<Point>((q - pow_mod(x, q - 2, q)) % q);
  return from_generators(deg, {Perm(std::move(t)), Perm(std::move(s))});
}

Group Group::direct_product(const std::vector<Group>& parts) {
  if (parts.empty()) fail(errc::precondition, "empty product");
  std::vector<Group> mat;
  mat.reserve(parts.size());
  uint64_t order = 1, deg = 0;
  for (const Group& p : parts) {
    mat.push_back(p.materialize());
    order = checked_mul(order, mat.back().order());
    deg += mat.back().degree();
  }
  if (order > kMaxOrder || checked_mul(order, deg) > kMaxCells)
    fail(errc::bound_exceeded, "direct product too large to enumerate");
  Point degree = static_cast<Point>(deg);

  auto embed = [&](size_t at, const Perm& p) {
    std::vector<Point> images(degree);
    Point off = 0;
    for (size_t i = 0; i < mat.size(); ++i) {
      Point d = mat[i].degree();
      for (Point j = 0; j < d; ++j) images[off + j] = off + (i == at ? p[j] : j);
      off += d;
    }
    return Perm(std::move(images));
  };

  std::vector<Perm> gens;
  for (size_t i = 0; i < mat.size(); ++i)
    for (const Perm& g : mat[i].generators()) gens.push_back(embed(i, g));

  // Cartesian product in lexicographic order of the concatenated images;
  // the part element lists are sorted, so the result is sorted.
  std::vector<Perm> elements;
  elements.reserve(order);
  std::vector<size_t> idx(mat.size(), 0);
  for (;;) {
    std::vector<Point> images(degree);
    Point off = 0;
    for (size_t i = 0; i < mat.size(); ++i) {
      const Perm& p = mat[i].elements()[idx[i]];
      Point d = mat[i].degree();
      for (Point j = 0; j < d; ++j) images[off + j] = off + p[j];
      off += d;
    }
    elements.emplace_back(std::move(images));
    size_t i = mat.size();
    while (i > 0) {
      --i;
      if (++idx[i] < mat[i].elements().size()) break;
      idx[i] = 0;
      if (i == 0) {
        std::sort(elements.begin(), elements.end());
        return from_elements(degree, std::move(gens), std::move(elements));
      }
    }
  }
}

Group Group::structural_product(std::vector<Group> parts) {
  if (parts.empty()) fail(errc::precondition, "empty product");
  auto rep = std::make_shared<Rep>();
  rep->flavor = Flavor::Product;
  uint64_t order = 1, deg = 0;
  for (Group& p : parts) {
    if (p.flavor() != Flavor::Explicit) p = p.materialize();
    order = checked_mul(order, p.order());
    deg += p.degree();
  }
  rep->product_order = order;
  rep->degree = static_cast<Point>(deg);
  rep->parts = std::move(parts);
  return Group(std::move(rep));
}

Flavor Group::flavor() const { return rep_->flavor; }

uint64_t Group::order() const {
  switch (rep_->flavor) {
  case Flavor::Cyclic:
    return rep_->modulus;
  case Flavor::Product:
    return rep_->product_order;
  case Flavor::Explicit:
    rep_->ensure_enumerated();
    return rep_->elements.size();
  }
  return 1;
}

Point Group::degree() const { return rep_->degree; }

const std::vector<Perm>& Group::generators() const {
  if (rep_->flavor != Flavor::Explicit) fail(errc::precondition, "structural group has no generator list");
  return rep_->gens;
}

const std::vector<Perm>& Group::elements() const {
  if (rep_->flavor != Flavor::Explicit) fail(errc::precondition, "structural group is not enumerated");
  rep_->ensure_enumerated();
  return rep_->elements;
}

bool Group::contains(const Perm& p) const {
  return p.degree() == degree() && sorted_contains(elements(), p);
}

uint64_t Group::cyclic_modulus() const {
  if (rep_->flavor != Flavor::Cyclic) fail(errc::precondition, "not a cyclic-flavor group");
  return rep_->modulus;
}

const std::vector<Group>& Group::parts() const {
  if (rep_->flavor != Flavor::Product) fail(errc::precondition, "not a product-flavor group");
  return rep_->parts;
}

bool Group::materializable() const {
  switch (rep_->flavor) {
  case Flavor::Explicit:
    return true;
  case Flavor::Cyclic:
    return rep_->modulus <= kMaxOrder && rep_->modulus * rep_->modulus <= kMaxCells;
  case Flavor::Product:
    return rep_->product_order <= kMaxOrder &&
           rep_->product_order * rep_->degree <= kMaxCells;
  }
  return false;
}

Group Group::materialize() const {
  switch (rep_->flavor) {
  case Flavor::Explicit:
    return *this;
  case Flavor::Cyclic:
    return cyclic_explicit(rep_->modulus);
  case Flavor::Product:
    return direct_product(rep_->parts);
  }
  fail(errc::precondition, "unreachable");
}

// ---- Subgroup ----

Subgroup Subgroup::whole(const Group& g) {
  switch (g.flavor()) {
  case Flavor::Cyclic:
    return cyclic_div(g, 1);
  case Flavor::Product:
    return product_mask(g, (uint64_t{1} << g.parts().size()) - 1);
  case Flavor::Explicit:
    return from_elements(g, g.elements(), g.generators());
  }
  fail(errc::precondition, "unreachable");
}

Subgroup Subgroup::trivial_of(const Group& g) {
  switch (g.flavor()) {
  case Flavor::Cyclic:
    return cyclic_div(g, g.cyclic_modulus());
  case Flavor::Product:
    return product_mask(g, 0);
  case Flavor::Explicit:
    return from_elements(g, {Perm::identity(g.degree())}, {});
  }
  fail(errc::precondition, "unreachable");
}

Subgroup Subgroup::from_elements(Group parent, std::vector<Perm> elements,
                                 std::vector<Perm> gens) {
  Subgroup s(std::move(parent), Kind::Explicit);
  std::sort(elements.begin(), elements.end());
  if (gens.empty()) gens.push_back(Perm::identity(s.parent_.degree()));
  s.elements_ = std::move(elements);
  s.gens_ = std::move(gens);
  return s;
}

Subgroup Subgroup::generated(const Group& parent, std::vector<Perm> gens) {
  for (const Perm& g : gens)
    if (!parent.contains(g)) fail(errc::precondition, "generator outside parent group");
  std::vector<Perm> elements = closure(parent.degree(), gens, parent.order());
  return from_elements(parent, std::move(elements), std::move(gens));
}

Subgroup Subgroup::cyclic_div(const Group& parent, uint64_t divisor) {
  uint64_t n = parent.cyclic_modulus();
  if (divisor == 0 || n % divisor) fail(errc::precondition, "divisor does not divide group order");
  Subgroup s(parent, Kind::CyclicDiv);
  s.divisor_ = divisor;
  return s;
}

Subgroup Subgroup::product_mask(const Group& parent, uint64_t mask) {
  size_t k = parent.parts().size();
  if (mask >= (uint64_t{1} << k)) fail(errc::precondition, "mask out of range");
  Subgroup s(parent, Kind::ProductMask);
  s.mask_ = mask;
  return s;
}

uint64_t Subgroup::order() const {
  switch (kind_) {
  case Kind::Explicit:
    return elements_.size();
  case Kind::CyclicDiv:
    return parent_.cyclic_modulus() / divisor_;
  case Kind::ProductMask: {
    uint64_t o = 1;
    for (size_t i = 0; i < parent_.parts().size(); ++i)
      if (mask_ >> i & 1) o = checked_mul(o, parent_.parts()[i].order());
    return o;
  }
  }
  return 1;
}

const std::vector<Perm>& Subgroup::elements() const {
  if (kind_ != Kind::Explicit) fail(errc::precondition, "structural subgroup is not enumerated");
  return elements_;
}

const std::vector<Perm>& Subgroup::gens() const {
  if (kind_ != Kind::Explicit) fail(errc::precondition, "structural subgroup has no generator list");
  return gens_;
}

uint64_t Subgroup::divisor() const {
  if (kind_ != Kind::CyclicDiv) fail(errc::precondition, "not a cyclic subgroup");
  return divisor_;
}

uint64_t Subgroup::mask() const {
  if (kind_ != Kind::ProductMask) fail(errc::precondition, "not a product subgroup");
  return mask_;
}

bool Subgroup::contains(const Perm& p) const { return sorted_contains(elements(), p); }

bool Subgroup::set_equal(const Subgroup& o) const {
  if (kind_ != o.kind_) return order() == o.order() && order() == 1;
  switch (kind_) {
  case Kind::Explicit:
    return elements_ == o.elements_;
  case Kind::CyclicDiv:
    return divisor_ == o.divisor_;
  case Kind::ProductMask:
    return mask_ == o.mask_;
  }
  return false;
}

bool Subgroup::is_normal_in_parent() const {
  switch (kind_) {
  case Kind::CyclicDiv:
  case Kind::ProductMask:
    return true;
  case Kind::Explicit:
    for (const Perm& g : parent_.generators()) {
      Perm gi = g.inverse();
      for (const Perm& s : gens_)
        if (!contains(gi * s * g)) return false;
    }
    return true;
  }
  return false;
}

Group Subgroup::as_group() const {
  switch (kind_) {
  case Kind::Explicit:
    return Group::from_elements(parent_.degree(), gens_, elements_);
  case Kind::CyclicDiv:
    return Group::cyclic(parent_.cyclic_modulus() / divisor_);
  case Kind::ProductMask: {
    std::vector<Group> live;
    for (size_t i = 0; i < parent_.parts().size(); ++i)
      if (mask_ >> i & 1) live.push_back(parent_.parts()[i]);
    if (live.empty()) return Group::trivial(parent_.degree());
    if (live.size() == 1) return live[0];
    return Group::structural_product(std::move(live));
  }
  }
  fail(errc::precondition, "unreachable");
}

uint64_t Subgroup::content_key() const {
  switch (kind_) {
  case Kind::Explicit: {
    uint64_t h = 0x9dc5cbf29ce48422ULL;
    for (const Perm& p : elements_) {
      h ^= p.hash();
      h *= 0x100000001b3ULL;
    }
    return h;
  }
  case Kind::CyclicDiv:
    return mix64(0x11, divisor_);
  case Kind::ProductMask:
    return mix64(0x22, mask_);
  }
  return 0;
}

// ---- elementary operations ----

Subgroup normal_closure(const Group& g, const std::vector<Perm>& seed) {
  std::unordered_set<Perm, PermHash> orbit;
  std::deque<Perm> work;
  for (const Perm& s : seed) {
    if (s.is_identity()) continue;
    if (orbit.insert(s).second) work.push_back(s);
  }
  std::vector<std::pair<Perm, Perm>> conj; // (g, g^-1) pairs
  for (const Perm& p : g.generators()) conj.emplace_back(p, p.inverse());
  while (!work.empty()) {
    Perm x = std::move(work.front());
    work.pop_front();
    for (const auto& [p, pi] : conj) {
      Perm y = pi * x * p;
      if (orbit.insert(y).second) work.push_back(std::move(y));
    }
  }
  if (orbit.empty()) return Subgroup::trivial_of(g);
  std::vector<Perm> orbit_sorted(orbit.begin(), orbit.end());
  std::sort(orbit_sorted.begin(), orbit_sorted.end());
  std::vector<Perm> gens;
  std::vector<Perm> elements = span_of(g.degree(), orbit_sorted, g.order(), &gens);
  return Subgroup::from_elements(g, std::move(elements), std::move(gens));
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

std::vector<std::vector<Perm>> conjugacy_classes(const Group& g) {
  const std::vector<Perm>& elems = g.elements();
  std::vector<std::pair<Perm, Perm>> conj;
  for (const Perm& p : g.generators()) conj.emplace_back(p, p.inverse());
  std::unordered_set<Perm, PermHash> visited;
  std::vector<std::vector<Perm>> classes;
  for (const Perm& start : elems) {
    if (visited.count(start)) continue;
    std::vector<Perm> cls;
    std::deque<Perm> work;
    visited.insert(start);
    work.push_back(start);
    while (!work.empty()) {
      Perm x = std::move(work.front());
      work.pop_front();
      cls.push_back(x);
      for (const auto& [p, pi] : conj) {
        Perm y = pi * x * p;
        if (visited.insert(y).second) work.push_back(std::move(y));
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_simple(const Group& g) {
  if (g.flavor() == Flavor::Cyclic) {
    uint64_t n = g.cyclic_modulus();
    if (n == 1) fail(errc::trivial_group, "trivial group has no simplicity");
    return is_prime(n);
  }
  if (g.flavor() == Flavor::Product) {
    const auto& parts = g.parts();
    if (parts.size() != 1) return false;
    return is_simple(parts[0]);
  }
  uint64_t n = g.order();
  if (n == 1) fail(errc::trivial_group, "trivial group has no simplicity");
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0].is_identity()) continue;
    // The class is conjugation-closed, so its span is already normal.
    std::vector<Perm> span = span_of(g.degree(), cls, n);
    if (span.size() < n) return false;
  }
  return true;
}

std::optional<Perm> full_order_element(const Group& g) {
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return std::nullopt;
  uint64_t n = g.order();
  for (const Perm& p : g.elements())
    if (p.order() == n) return p;
  return std::nullopt;
}

} // namespace pfg
