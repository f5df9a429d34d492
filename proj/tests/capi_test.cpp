#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <string>

#include <pfg.h>

using nlohmann::json;

namespace {

// Round-trips through real files since that is the only loader surface.
std::string write_temp(const char* name, const std::string& text) {
  std::string path = std::string("capi_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { pfg_string_free(s); }
  json parsed() const { return json::parse(s); }
};

} // namespace

TEST_CASE("group handles load, report, and serialize") {
  std::string path = write_temp("s4.json", R"x({"kind":"symmetric","n":4})x");
  pfg_group* g = nullptr;
  REQUIRE(pfg_group_load(path.c_str(), &g) == PFG_OK);

  StringOut factors;
  REQUIRE(pfg_report_factors(g, "s4", &factors.s) == PFG_OK);
  json j = factors.parsed();
  CHECK(j["order"] == 24);
  CHECK(j["pass"] == true);
  CHECK(j["factors"].size() == 2);

  StringOut ident;
  CHECK(pfg_report_identify(g, "s4", &ident.s) == PFG_NOT_SIMPLE);

  StringOut ser;
  REQUIRE(pfg_group_to_json(g, &ser.s) == PFG_OK);
  CHECK(json::parse(ser.s)["kind"] == "permutation");

  pfg_group_free(g);
  std::remove(path.c_str());
}

TEST_CASE("error paths set status and message") {
  pfg_group* g = nullptr;
  CHECK(pfg_group_load("no_such_file.json", &g) == PFG_PARSE_ERROR);
  CHECK(std::string(pfg_last_error()).find("no_such_file") != std::string::npos);

  std::string bad = write_temp("bad.json", R"x({"kind":"cyclic"})x");
  CHECK(pfg_group_load(bad.c_str(), &g) == PFG_PARSE_ERROR);
  std::remove(bad.c_str());

  CHECK(pfg_group_load(nullptr, &g) == PFG_PRECONDITION);
  CHECK(pfg_report_factors(nullptr, "x", nullptr) == PFG_PRECONDITION);

  // A solvability witness of a nonsolvable group is a library error, not a
  // report; it surfaces as a status.
  std::string a5 = write_temp("a5.json", R"x({"kind":"alternating","n":5})x");
  REQUIRE(pfg_group_load(a5.c_str(), &g) == PFG_OK);
  StringOut out;
  CHECK(pfg_report_radical_witness(g, "a5", &out.s) == PFG_NOT_SOLVABLE);
  CHECK(out.s == nullptr);
  pfg_group_free(g);
  std::remove(a5.c_str());
}

TEST_CASE("tower handles cover validate, truncate, and intersect") {
  std::string path = write_temp("zhat.json", R"x({"family":{"kind":"zhat","prefix":5}})x");
  pfg_tower* t = nullptr;
  REQUIRE(pfg_tower_load(path.c_str(), &t) == PFG_OK);

  StringOut v;
  REQUIRE(pfg_report_tower_validate(t, "zhat", &v.s) == PFG_OK);
  CHECK(v.parsed()["pass"] == true);

  pfg_tower* short_t = nullptr;
  REQUIRE(pfg_tower_truncate(t, 3, &short_t) == PFG_OK);
  StringOut tv;
  REQUIRE(pfg_report_tower_validate(short_t, "zhat", &tv.s) == PFG_OK);
  CHECK(tv.parsed()["levels"] == json::array({1, 2, 6}));
  CHECK(pfg_tower_truncate(t, 9, &short_t) == PFG_PRECONDITION);

  StringOut pro;
  REQUIRE(pfg_report_tower_prosolvable(t, "zhat", &pro.s) == PFG_OK);
  CHECK(pro.parsed()["prosolvable"] == true);

  pfg_tower_free(short_t);
  pfg_tower_free(t);
  std::remove(path.c_str());

  // Constant S4 tower against its alternating part.
  std::string ct = write_temp(
      "const_s4.json",
      R"x({"family":{"kind":"constant","group":{"kind":"symmetric","n":4},"prefix":2}})x");
  std::string cs = write_temp(
      "a4_levels.json",
      R"x({"kind":"closed_subgroup","levels":[{"generators":["(0 1 2)","(0 1)(2 3)"]},{"generators":["(0 1 2)","(0 1)(2 3)"]}]})x");
  pfg_tower* c = nullptr;
  REQUIRE(pfg_tower_load(ct.c_str(), &c) == PFG_OK);
  pfg_closed_subgroup* h = nullptr;
  REQUIRE(pfg_closed_subgroup_load(cs.c_str(), c, &h) == PFG_OK);
  StringOut inter;
  REQUIRE(pfg_report_tower_intersect(h, "const_s4", "a4", 0, &inter.s) == PFG_OK);
  json ij = inter.parsed();
  CHECK(ij["pass"] == true);
  CHECK(ij["subgroup_orders"] == json::array({12, 12}));
  pfg_closed_subgroup_free(h);
  pfg_tower_free(c);
  std::remove(ct.c_str());
  std::remove(cs.c_str());
}

TEST_CASE("section and coverage reports cross the boundary") {
  std::string a5p = write_temp("amb.json", R"x({"kind":"alternating","n":5})x");
  std::string c5p = write_temp("tgt.json", R"x({"kind":"cyclic","n":5})x");
  pfg_group* amb = nullptr;
  pfg_group* tgt = nullptr;
  REQUIRE(pfg_group_load(a5p.c_str(), &amb) == PFG_OK);
  REQUIRE(pfg_group_load(c5p.c_str(), &tgt) == PFG_OK);

  StringOut sec;
  REQUIRE(pfg_report_section(tgt, "c5", amb, "a5", &sec.s) == PFG_OK);
  CHECK(sec.parsed()["found"] == true);

  StringOut ident;
  REQUIRE(pfg_report_identify(amb, "a5", &ident.s) == PFG_OK);
  CHECK(ident.parsed()["type"] == "A5");

  StringOut cover;
  REQUIRE(pfg_report_power_cover(amb, "a5", 2, 3, &cover.s) == PFG_OK);
  json cj = cover.parsed();
  CHECK(cj["pass"] == true);
  CHECK(cj["coverage"] == json::array({60, 60}));

  pfg_group_free(amb);
  pfg_group_free(tgt);
  std::remove(a5p.c_str());
  std::remove(c5p.c_str());
}
