#include "simple_type.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "error.hpp"
#include "hom.hpp"

namespace pfg {

namespace {

bool prime(uint64_t n) {
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<uint64_t> divisors_of(uint64_t n) {
  std::vector<uint64_t> divs = {1};
  for (auto [p, e] : factorize(n)) {
    size_t base = divs.size();
    uint64_t pk = 1;
    for (uint32_t k = 0; k < e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

OrderHistogram combine(const OrderHistogram& a, const OrderHistogram& b) {
  std::map<uint64_t, uint64_t> acc;
  for (auto [oa, ca] : a)
    for (auto [ob, cb] : b) acc[std::lcm(oa, ob)] += ca * cb;
  return {acc.begin(), acc.end()};
}

uint64_t fingerprint_hash(const OrderHistogram& h) {
  uint64_t x = 1469598103934665603ULL;
  auto mix = [&](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      x ^= (v >> (8 * i)) & 0xff;
      x *= 1099511628211ULL;
    }
  };
  for (auto [o, c] : h) {
    mix(o);
    mix(c);
  }
  return x;
}

uint64_t alternating_order(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t k = 2; k <= n; ++k) f *= k;
  return f / 2;
}

uint64_t psl2_order(uint32_t q) { return uint64_t{q} * (q - 1) * (q + 1) / 2; }

const OrderHistogram& alternating_fingerprint(uint32_t n) {
  static std::mutex mu;
  static std::map<uint32_t, OrderHistogram> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, order_histogram(reference_alternating(n))).first;
  return it->second;
}

const OrderHistogram& psl2_fingerprint(uint32_t q) {
  static std::mutex mu;
  static std::map<uint32_t, OrderHistogram> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, order_histogram(reference_psl2(q))).first;
  return it->second;
}

} // namespace

OrderHistogram order_histogram(const Group& g) {
  switch (g.flavor()) {
  case Flavor::Cyclic: {
    std::map<uint64_t, uint64_t> acc;
    for (uint64_t d : divisors_of(g.cyclic_modulus())) acc[d] = euler_phi(d);
    return {acc.begin(), acc.end()};
  }
  case Flavor::Product: {
    OrderHistogram h = {{1, 1}};
    for (const Group& p : g.parts()) h = combine(h, order_histogram(p));
    return h;
  }
  case Flavor::Explicit: {
    std::map<uint64_t, uint64_t> acc;
    for (const Perm& x : g.elements()) ++acc[x.order()];
    return {acc.begin(), acc.end()};
  }
  }
  fail(errc::precondition, "unreachable");
}

std::string SimpleType::label() const {
  char buf[64];
  switch (kind) {
  case Kind::Cyclic:
    std::snprintf(buf, sizeof buf, "C%llu", static_cast<unsigned long long>(param));
    return buf;
  case Kind::Alternating:
    std::snprintf(buf, sizeof buf, "A%llu", static_cast<unsigned long long>(param));
    return buf;
  case Kind::PSL2:
    std::snprintf(buf, sizeof buf, "PSL2(%llu)", static_cast<unsigned long long>(param));
    return buf;
  case Kind::Other:
    std::snprintf(buf, sizeof buf, "Other(order=%llu,h=%016llx)",
                  static_cast<unsigned long long>(order),
                  static_cast<unsigned long long>(fingerprint_hash(fingerprint)));
    return buf;
  }
  fail(errc::precondition, "unreachable");
}

const Group& reference_alternating(uint32_t n) {
  if (n < 5 || n > 8) fail(errc::precondition, "alternating reference limited to n in 5..8");
  static std::mutex mu;
  static std::map<uint32_t, Group> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Group::alternating(n)).first;
  return it->second;
}

const Group& reference_psl2(uint32_t q) {
  if (q != 5 && q != 7 && q != 11 && q != 13)
    fail(errc::precondition, "psl2 reference limited to q in {5,7,11,13}");
  static std::mutex mu;
  static std::map<uint32_t, Group> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, Group::psl2(q)).first;
  return it->second;
}

SimpleType identify(const Group& g) {
  if (g.order() == 1) fail(errc::trivial_group, "trivial group has no simple type");
  switch (g.flavor()) {
  case Flavor::Cyclic: {
    uint64_t n = g.cyclic_modulus();
    if (!prime(n)) fail(errc::not_simple, "cyclic group of composite order");
    SimpleType t;
    t.kind = SimpleType::Kind::Cyclic;
    t.param = n;
    t.order = n;
    t.fingerprint = {{1, 1}, {n, n - 1}};
    return t;
  }
  case Flavor::Product: {
    const auto& parts = g.parts();
    if (parts.size() != 1) fail(errc::not_simple, "product with several parts");
    return identify(parts[0]);
  }
  case Flavor::Explicit:
    break;
  }

  uint64_t n = g.order();
  if (!is_simple(g)) fail(errc::not_simple, "group has a proper nontrivial normal subgroup");
  OrderHistogram fp = order_histogram(g);
  SimpleType t;
  t.order = n;
  t.fingerprint = std::move(fp);
  if (prime(n)) {
    t.kind = SimpleType::Kind::Cyclic;
    t.param = n;
    return t;
  }
  // A5 before PSL2(5): the isomorphic pair gets the alternating label.
  for (uint32_t m = 5; m <= 8; ++m)
    if (n == alternating_order(m) && t.fingerprint == alternating_fingerprint(m)) {
      t.kind = SimpleType::Kind::Alternating;
      t.param = m;
      return t;
    }
  for (uint32_t q : {5u, 7u, 11u, 13u})
    if (n == psl2_order(q) && t.fingerprint == psl2_fingerprint(q)) {
      t.kind = SimpleType::Kind::PSL2;
      t.param = q;
      return t;
    }
  t.kind = SimpleType::Kind::Other;
  t.witness = std::make_shared<const Group>(g);
  return t;
}

bool isomorphic(const Group& ga, const Group& gb) {
  if (ga.order() != gb.order()) return false;
  uint64_t n = ga.order();
  if (n == 1) return true;
  if (n > kIsoBound)
    fail(errc::bound_exceeded, "isomorphism search capped at order " + std::to_string(kIsoBound));
  Group a = ga.materialize();
  Group b = gb.materialize();
  if (order_histogram(a) != order_histogram(b)) return false;

  std::vector<Perm> gens = small_generating_set(a.degree(), a.elements());
  std::vector<uint64_t> prefix_order(gens.size());
  {
    std::vector<Perm> pref;
    for (size_t i = 0; i < gens.size(); ++i) {
      pref.push_back(gens[i]);
      prefix_order[i] = closure(a.degree(), pref, n).size();
    }
  }

  auto class_sizes = [](const Group& g) {
    std::unordered_map<Perm, uint64_t, PermHash> m;
    for (const auto& cls : conjugacy_classes(g))
      for (const Perm& x : cls) m.emplace(x, cls.size());
    return m;
  };
  auto ca = class_sizes(a);
  auto cb = class_sizes(b);
  std::vector<std::vector<Perm>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    uint64_t ord = gens[i].order(), csz = ca.at(gens[i]);
    for (const Perm& y : b.elements())
      if (y.order() == ord && cb.at(y) == csz) cand[i].push_back(y);
    if (cand[i].empty()) return false;
  }

  Group dom = Group::from_elements(a.degree(), gens, a.elements());
  std::vector<Perm> images;
  std::function<bool(size_t)> dfs = [&](size_t depth) -> bool {
    if (depth == gens.size()) {
      auto h = Hom::try_from_images(dom, b, images);
      return h && h->surjective();
    }
    for (const Perm& y : cand[depth]) {
      images.push_back(y);
      // An isomorphism maps <g_0..g_d> onto a subgroup of the same order.
      if (closure(b.degree(), images, n).size() == prefix_order[depth] && dfs(depth + 1))
        return true;
      images.pop_back();
    }
    return false;
  };
  return dfs(0);
}

bool same_type(const SimpleType& a, const SimpleType& b) {
  if (a.kind != SimpleType::Kind::Other && b.kind != SimpleType::Kind::Other)
    return a.kind == b.kind && a.param == b.param;
  if (a.order != b.order || a.fingerprint != b.fingerprint) return false;
  // identify() labels anything matching a reference, so a recognised kind
  // never shares order + fingerprint with an Other.
  if (a.kind != b.kind) return false;
  if (!a.witness || !b.witness) fail(errc::ambiguous, "type witnesses unavailable");
  if (a.order > kIsoBound)
    fail(errc::ambiguous, "cannot settle type equality beyond the isomorphism bound");
  return isomorphic(*a.witness, *b.witness);
}

bool same_type(const Group& g, const SimpleType& t) { return same_type(identify(g), t); }

Group group_for_type_label(const std::string& label) {
  auto parse_num = [&](size_t from, size_t upto) -> uint64_t {
    if (from >= upto) fail(errc::parse, "bad simple type label: " + label);
    uint64_t v = 0;
    for (size_t i = from; i < upto; ++i) {
      char c = label[i];
      if (c < '0' || c > '9') fail(errc::parse, "bad simple type label: " + label);
      v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    return v;
  };
  if (label.rfind("PSL2(", 0) == 0 && label.back() == ')') {
    uint64_t q = parse_num(5, label.size() - 1);
    if (q != 5 && q != 7 && q != 11 && q != 13)
      fail(errc::parse, "unsupported PSL2 parameter in label: " + label);
    return reference_psl2(static_cast<uint32_t>(q));
  }
  if (label.size() > 1 && label[0] == 'A') {
    uint64_t m = parse_num(1, label.size());
    if (m < 5 || m > 8) fail(errc::parse, "unsupported alternating label: " + label);
    return reference_alternating(static_cast<uint32_t>(m));
  }
  if (label.size() > 1 && label[0] == 'C') {
    uint64_t p = parse_num(1, label.size());
    if (!prime(p)) fail(errc::parse, "cyclic label with composite order: " + label);
    return Group::cyclic(p);
  }
  fail(errc::parse, "unrecognised simple type label: " + label);
}

} // namespace pfg
