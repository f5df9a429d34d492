#include "io.hpp"

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"
#include "hom.hpp"

namespace pfg {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(errc::parse, what); }

void check_keys(const json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail("expected an object");
  for (const char* k : required)
    if (!j.contains(k)) fail(std::string("missing key '") + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known) fail("unknown key '" + it.key() + "'");
  }
}

uint64_t take_nat(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) fail(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<uint64_t>();
}

std::string take_str(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string()) fail(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

std::vector<Perm> take_perms(const json& arr, const char* what, Point degree) {
  if (!arr.is_array() || arr.empty()) fail(std::string(what) + " must be a nonempty list");
  std::vector<Perm> out;
  for (const json& s : arr) {
    if (!s.is_string()) fail(std::string(what) + " entries must be cycle strings");
    out.push_back(Perm::from_cycles(s.get<std::string>(), degree));
  }
  return out;
}

json multiset_json(const FactorMultiset& m) {
  json arr = json::array();
  for (const auto& [ty, count] : m) {
    json e;
    e["count"] = count;
    e["type"] = ty.label();
    arr.push_back(e);
  }
  return arr;
}

json level_orders(const Tower& t) {
  json arr = json::array();
  for (size_t i = 0; i < t.size(); ++i) arr.push_back(t.level(i).order());
  return arr;
}

} // namespace

Group group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) fail("group description needs a 'kind'");
  std::string kind = take_str(j, "kind");
  if (kind == "permutation") {
    check_keys(j, {"kind", "degree", "generators"});
    uint64_t degree = take_nat(j, "degree");
    if (degree == 0 || degree > 100000) fail("'degree' out of range");
    return Group::from_generators(static_cast<Point>(degree),
                                  take_perms(j.at("generators"), "'generators'",
                                             static_cast<Point>(degree)));
  }
  if (kind == "cyclic") {
    check_keys(j, {"kind", "n"});
    return Group::cyclic(take_nat(j, "n"));
  }
  if (kind == "symmetric") {
    check_keys(j, {"kind", "n"});
    return Group::symmetric(static_cast<Point>(take_nat(j, "n")));
  }
  if (kind == "alternating") {
    check_keys(j, {"kind", "n"});
    return Group::alternating(static_cast<Point>(take_nat(j, "n")));
  }
  if (kind == "dihedral") {
    check_keys(j, {"kind", "n"});
    return Group::dihedral(static_cast<Point>(take_nat(j, "n")));
  }
  if (kind == "sl2") {
    check_keys(j, {"kind", "q"});
    return Group::sl2(take_nat(j, "q"));
  }
  if (kind == "direct_product") {
    check_keys(j, {"kind", "parts"});
    const json& parts = j.at("parts");
    if (!parts.is_array() || parts.empty()) fail("'parts' must be a nonempty list");
    std::vector<Group> out;
    for (const json& p : parts) out.push_back(group_from_json(p));
    return Group::structural_product(out);
  }
  fail("unknown group kind '" + kind + "'");
}

Group load_group_file(const std::string& path) { return group_from_json(parse_file(path)); }

json group_to_json(const Group& g) {
  json j;
  switch (g.flavor()) {
    case Flavor::Cyclic:
      j["kind"] = "cyclic";
      j["n"] = g.cyclic_modulus();
      return j;
    case Flavor::Product: {
      j["kind"] = "direct_product";
      json parts = json::array();
      for (const Group& p : g.parts()) parts.push_back(group_to_json(p));
      j["parts"] = parts;
      return j;
    }
    case Flavor::Explicit:
      break;
  }
  j["kind"] = "permutation";
  j["degree"] = g.degree();
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.to_cycles());
  j["generators"] = gens;
  return j;
}

Tower tower_from_json(const json& j) {
  if (!j.is_object()) fail("tower description must be an object");
  if (j.contains("family")) {
    check_keys(j, {"family"}, {"annotated"});
    const json& f = j.at("family");
    if (!f.is_object() || !f.contains("kind")) fail("'family' needs a 'kind'");
    std::string kind = take_str(f, "kind");
    Tower t = [&] {
      if (kind == "zp") {
        check_keys(f, {"kind", "p", "prefix"});
        return Tower::zp(take_nat(f, "p"), static_cast<size_t>(take_nat(f, "prefix")));
      }
      if (kind == "zhat") {
        check_keys(f, {"kind", "prefix"});
        return Tower::zhat(static_cast<size_t>(take_nat(f, "prefix")));
      }
      if (kind == "prod_simple") {
        check_keys(f, {"kind", "parts", "prefix"});
        const json& parts = f.at("parts");
        if (!parts.is_array() || parts.empty()) fail("'parts' must be a nonempty list");
        std::vector<std::string> labels;
        for (const json& p : parts) {
          if (!p.is_string()) fail("'parts' entries must be type labels");
          labels.push_back(p.get<std::string>());
        }
        return Tower::prod_simple(labels, static_cast<size_t>(take_nat(f, "prefix")));
      }
      if (kind == "constant") {
        check_keys(f, {"kind", "group", "prefix"});
        return Tower::constant(group_from_json(f.at("group")),
                               static_cast<size_t>(take_nat(f, "prefix")));
      }
      fail("unknown family kind '" + kind + "'");
    }();
    if (j.contains("annotated")) {
      const json& a = j.at("annotated");
      if (!a.is_boolean()) fail("'annotated' must be a boolean");
      if (!a.get<bool>()) return t.without_family();
    }
    return t;
  }

  check_keys(j, {"levels", "maps"});
  const json& jl = j.at("levels");
  if (!jl.is_array() || jl.empty()) fail("'levels' must be a nonempty list");
  std::vector<Group> levels;
  for (const json& g : jl) {
    Group lg = group_from_json(g);
    // Map images are permutations of the level's degree, so structural
    // levels materialize here.
    levels.push_back(lg.flavor() == Flavor::Explicit ? lg : lg.materialize());
  }
  const json& jm = j.at("maps");
  if (!jm.is_array()) fail("'maps' must be a list");
  if (jm.size() + 1 != levels.size())
    throw Error(errc::invalid_tower, "a tower with N levels needs N-1 maps");
  std::vector<Hom> maps;
  for (size_t i = 0; i < jm.size(); ++i) {
    check_keys(jm[i], {"gen_images"});
    const Group& domain = levels[i + 1];
    const Group& codomain = levels[i];
    const json& imgs = jm[i].at("gen_images");
    if (!imgs.is_array() || imgs.size() != domain.generators().size())
      fail("map " + std::to_string(i + 1) + ": one image per domain generator required");
    std::vector<Perm> images;
    for (const json& cycles : imgs) {
      if (!cycles.is_array() || cycles.empty())
        fail("map " + std::to_string(i + 1) + ": images are nonempty lists of cycle strings");
      std::string joined;
      for (const json& c : cycles) {
        if (!c.is_string()) fail("cycle entries must be strings");
        joined += c.get<std::string>();
      }
      images.push_back(Perm::from_cycles(joined, codomain.degree()));
    }
    std::optional<Hom> h = Hom::try_from_images(domain, codomain, images);
    if (!h)
      throw Error(errc::invalid_tower,
                  "InvalidMap(" + std::to_string(i + 1) + "): images do not define a homomorphism");
    maps.push_back(std::move(*h));
  }
  return Tower::from_levels(std::move(levels), std::move(maps));
}

Tower load_tower_file(const std::string& path) { return tower_from_json(parse_file(path)); }

ClosedSubgroup closed_subgroup_from_json(const json& j, const Tower& t) {
  check_keys(j, {"kind", "levels"});
  if (take_str(j, "kind") != "closed_subgroup") fail("expected kind 'closed_subgroup'");
  const json& jl = j.at("levels");
  if (!jl.is_array()) fail("'levels' must be a list");
  std::vector<Subgroup> levels;
  for (size_t i = 0; i < jl.size(); ++i) {
    check_keys(jl[i], {"generators"});
    if (i >= t.size()) break; // from_levels reports the count mismatch
    const Group& parent = t.level(i);
    if (parent.flavor() != Flavor::Explicit)
      throw Error(errc::precondition, "closed subgroup files need explicit tower levels");
    const json& gens = jl[i].at("generators");
    if (!gens.is_array()) fail("'generators' must be a list");
    if (gens.empty()) {
      levels.push_back(Subgroup::trivial_of(parent));
      continue;
    }
    levels.push_back(Subgroup::generated(parent, take_perms(gens, "'generators'",
                                                            parent.degree())));
  }
  if (jl.size() != t.size())
    throw Error(errc::incompatible_subgroup, "one subgroup per tower level required");
  return ClosedSubgroup::from_levels(t, std::move(levels));
}

ClosedSubgroup load_closed_subgroup_file(const std::string& path, const Tower& t) {
  return closed_subgroup_from_json(parse_file(path), t);
}

json report_factors(const std::string& name, const Group& g) {
  json j;
  j["factors"] = multiset_json(factor_multiset(g));
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = true;
  return j;
}

json report_series(const std::string& name, const Group& g, uint64_t seed) {
  Series s = composition_series(g, seed);
  json steps = json::array();
  for (const SeriesStep& st : s.steps) {
    json e;
    e["factor"] = st.factor.label();
    e["order"] = st.subgroup.order();
    steps.push_back(e);
  }
  json j;
  j["factors"] = multiset_json(factors_of(s));
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = true;
  j["seed"] = seed;
  j["steps"] = steps;
  return j;
}

json report_jh_verify(const std::string& name, const Group& g, uint64_t trials, uint64_t seed) {
  JhOutcome out = jh_verify(g, trials, seed);
  json j;
  j["chains_found"] = out.chains_found;
  j["factors"] = multiset_json(out.factors);
  j["group"] = name;
  j["order"] = out.order;
  j["pass"] = out.pass;
  j["seed"] = seed;
  j["trials"] = trials;
  return j;
}

json report_identify(const std::string& name, const Group& g) {
  json j;
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = true;
  j["type"] = identify(g).label();
  return j;
}

json report_solvable(const std::string& name, const Group& g) {
  json j;
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = true;
  j["solvable"] = is_solvable(g);
  return j;
}

json report_radical_witness(const std::string& name, const Group& g) {
  json j;
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = true;
  j["witness"] = radical_witness(g);
  return j;
}

json report_tower_validate(const std::string& name, const Tower& t) {
  TowerCheck c = validate(t);
  json j;
  j["levels"] = level_orders(t);
  j["pass"] = c.pass;
  j["tower"] = name;
  if (!c.pass) {
    json v;
    v["detail"] = c.detail;
    v["kind"] = c.violation;
    v["level"] = c.level;
    j["violation"] = v;
  }
  return j;
}

json report_tower_factors(const std::string& name, const Tower& t) {
  FactorProfile p = profile(t);
  json entries = json::array();
  for (const ProfileEntry& e : p) {
    json x;
    x["multiplicity"] = e.mult.label();
    x["trace"] = e.trace;
    x["type"] = e.type.label();
    entries.push_back(x);
  }
  json j;
  j["levels"] = level_orders(t);
  j["pass"] = true;
  j["profile"] = entries;
  j["tower"] = name;
  return j;
}

json report_tower_series(const std::string& name, const Tower& t, uint64_t seed) {
  InducedSeries s = induced_series(t, seed);
  json blocks = json::array();
  for (const Series& b : s.blocks) {
    json labels = json::array();
    for (const SeriesStep& st : b.steps) labels.push_back(st.factor.label());
    blocks.push_back(labels);
  }
  json j;
  j["accumulated"] = multiset_json(accumulate(s, s.blocks.size() - 1));
  j["blocks"] = blocks;
  j["levels"] = level_orders(t);
  j["pass"] = true;
  j["seed"] = seed;
  j["tower"] = name;
  return j;
}

json report_tower_match(const std::string& name, const Tower& t, uint64_t seed,
                        uint64_t trials) {
  json pairs = json::array();
  json j;
  j["pass"] = true;
  for (uint64_t i = 0; i < trials; ++i) {
    uint64_t a = seed + 2 * i, b = seed + 2 * i + 1;
    pairs.push_back(json::array({a, b}));
    MatchOutcome out = match_series(t, a, b);
    if (!out.pass && j["pass"].get<bool>()) {
      j["pass"] = false;
      json d;
      d["block"] = out.first_divergence;
      d["detail"] = out.detail;
      d["seed_a"] = a;
      d["seed_b"] = b;
      j["divergence"] = d;
    }
  }
  j["pairs"] = pairs;
  j["seed"] = seed;
  j["tower"] = name;
  j["trials"] = trials;
  return j;
}

json report_tower_prosolvable(const std::string& name, const Tower& t) {
  json j;
  j["pass"] = true;
  j["prefix_relative"] = !t.family().has_value();
  j["prosolvable"] = prosolvable(t);
  j["tower"] = name;
  return j;
}

json report_tower_anabelian(const std::string& name, const Tower& t) {
  json j;
  j["anabelian"] = anabelian(t);
  j["pass"] = true;
  j["tower"] = name;
  return j;
}

json report_tower_intersect(const std::string& name, const std::string& sub_name,
                            const ClosedSubgroup& h, uint64_t seed) {
  InducedSeries s = induced_series(h.tower(), seed);
  IntersectOutcome out = intersect_series(s, h);
  json orders = json::array();
  for (size_t i = 0; i < h.size(); ++i) orders.push_back(h.level(i).order());
  json j;
  j["factors"] = multiset_json(out.factors);
  j["matched_steps"] = out.matched_steps;
  j["pass"] = out.pass;
  j["seed"] = seed;
  j["subgroup"] = sub_name;
  j["subgroup_orders"] = orders;
  j["tower"] = name;
  j["trivial_steps"] = out.trivial_steps;
  if (!out.pass) j["detail"] = out.detail;
  return j;
}

json report_section(const std::string& target_name, const Group& target,
                    const std::string& ambient_name, const Group& ambient) {
  std::optional<SectionWitness> w = is_section(target, ambient);
  json j;
  j["ambient"] = ambient_name;
  j["found"] = w.has_value();
  j["pass"] = true;
  j["target"] = target_name;
  if (w) {
    json x;
    x["denominator_order"] = w->d.order();
    x["numerator_order"] = w->c.order();
    if (w->quotient_type) x["quotient_type"] = w->quotient_type->label();
    j["witness"] = x;
  }
  return j;
}

json report_sections(const std::string& name, const Group& g) {
  json labels = json::array();
  for (const SimpleType& t : simple_sections(g)) labels.push_back(t.label());
  json j;
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = true;
  j["sections"] = labels;
  return j;
}

json report_power_cover(const std::string& name, const Group& g, uint64_t q, uint64_t m) {
  CoverageOutcome out = power_word_coverage(g, q, m);
  json j;
  j["coverage"] = json::array({out.covered, out.order});
  j["group"] = name;
  j["m"] = m;
  j["order"] = g.order();
  j["pass"] = out.pass;
  j["q"] = q;
  return j;
}

json report_perfectness(const std::string& name, const Group& g) {
  PerfectnessOutcome out = perfectness_check(g);
  json j;
  j["abelian_factor"] = out.abelian_factor;
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = out.pass;
  j["perfect"] = out.perfect;
  return j;
}

json report_a5_check(const std::string& name, const Group& g) {
  A5Outcome out = a5_corollary_check(g);
  json labels = json::array();
  for (const SimpleType& t : out.sections) labels.push_back(t.label());
  json j;
  j["group"] = name;
  j["order"] = g.order();
  j["pass"] = out.pass;
  j["sections"] = labels;
  return j;
}

} // namespace pfg
