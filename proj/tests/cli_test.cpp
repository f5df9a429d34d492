#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PFG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  RunResult r;
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string with_dirs(const char* args) {
  std::string s = args;
  const std::string data = std::string(PFG_SOURCE_DIR) + "/tests/data";
  size_t at;
  while ((at = s.find("{D}")) != std::string::npos) s.replace(at, 3, data);
  return s;
}

std::string read_golden(const char* name) {
  std::string path = std::string(PFG_SOURCE_DIR) + "/tests/golden/" + name + ".json";
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Case {
  const char* golden;
  int exit_code;
  const char* args;
};

// One row per verb/flag combination; goldens pin the exact bytes.
const Case kMatrix[] = {
    {"01_factors_s4", 0, "factors {D}/s4.json"},
    {"02_factors_sl2_5", 0, "factors {D}/sl2_5.json"},
    {"03_factors_c720", 0, "factors {D}/c720.json"},
    {"04_factors_a5xc2", 0, "factors {D}/a5xc2.json"},
    {"05_series_a5", 0, "series {D}/a5.json --seed 1"},
    {"06_jh_verify_s4", 0, "jh-verify {D}/s4.json --trials 10"},
    {"07_identify_a5", 0, "identify {D}/a5.json"},
    {"08_solvable_s4", 0, "solvable {D}/s4.json"},
    {"09_radical_witness_c720", 0, "radical-witness {D}/c720.json"},
    {"10_tower_validate_zhat", 0, "tower-validate {D}/zhat.json"},
    {"11_tower_validate_bad", 1, "tower-validate {D}/bad_tower.json"},
    {"12_tower_validate_explicit", 0, "tower-validate {D}/explicit_tower.json"},
    {"13_tower_factors_zhat", 0, "tower-factors {D}/zhat.json"},
    {"14_tower_factors_zhat_bare", 0, "tower-factors {D}/zhat_bare.json"},
    {"15_tower_factors_prod", 0, "tower-factors {D}/prod.json"},
    {"16_tower_series_z5", 0, "tower-series {D}/z5.json --seed 2"},
    {"17_tower_series_const_s4", 0, "tower-series {D}/const_s4.json"},
    {"18_tower_match_prod", 0, "tower-match {D}/prod.json --trials 3"},
    {"19_tower_match_zhat", 0, "tower-match {D}/zhat.json --trials 5 --seed 7"},
    {"20_tower_prosolvable_zhat", 0, "tower-prosolvable {D}/zhat.json"},
    {"21_tower_prosolvable_prod", 0, "tower-prosolvable {D}/prod.json"},
    {"22_tower_anabelian_prod", 0, "tower-anabelian {D}/prod.json"},
    {"23_tower_intersect_const_s4", 0, "tower-intersect {D}/const_s4.json {D}/a4_sub.json"},
    {"24_section_c2_s4", 0, "section {D}/c2.json {D}/s4.json"},
    {"25_sections_a5", 0, "sections {D}/a5.json"},
    {"26_power_cover_a5", 0, "power-cover {D}/a5.json --q 2 --m 3"},
    {"27_power_cover_c2", 1, "power-cover {D}/c2.json --q 2 --m 1"},
    {"28_perfectness_sl2_5", 0, "perfectness {D}/sl2_5.json"},
    {"29_a5_check_s5", 0, "a5-check {D}/s5.json"},
    {"30_tower_series_z5_cut", 0, "tower-series {D}/z5.json --levels 2"},
};

} // namespace

TEST_CASE("json reports match their goldens byte for byte, twice") {
  for (const Case& c : kMatrix) {
    CAPTURE(c.golden);
    std::string args = with_dirs(c.args) + " --json";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == c.exit_code);
    CHECK(second.exit_code == c.exit_code);
    CHECK(first.out == second.out);
    CHECK(first.out == read_golden(c.golden));
  }
}

TEST_CASE("human output carries the same verdict") {
  RunResult table = run_cli(with_dirs("factors {D}/s4.json"));
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("C2 x3, C3 x1") != std::string::npos);

  RunResult fail = run_cli(with_dirs("power-cover {D}/c2.json --q 2 --m 1"));
  CHECK(fail.exit_code == 1);
}

TEST_CASE("input errors exit 2 with nothing on stdout") {
  RunResult bad = run_cli(with_dirs("factors {D}/malformed.json --json"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());

  CHECK(run_cli("factors no_such_file.json").exit_code == 2);
  // Operating on an invalid tower is an input error, not a failed check.
  CHECK(run_cli(with_dirs("tower-series {D}/bad_tower.json")).exit_code == 2);
  // Closed subgroup files require explicit levels.
  CHECK(run_cli(with_dirs("tower-intersect {D}/z5.json {D}/a4_sub.json")).exit_code == 2);
  // Truncation past the stored prefix is refused.
  CHECK(run_cli(with_dirs("tower-series {D}/z5.json --levels 9")).exit_code == 2);
}

TEST_CASE("bad invocations are rejected") {
  CHECK(run_cli("").exit_code != 0);
  CHECK(run_cli("no-such-verb x.json").exit_code != 0);
  CHECK(run_cli(with_dirs("factors {D}/s4.json --bogus 3")).exit_code != 0);
  CHECK(run_cli(with_dirs("section {D}/s4.json")).exit_code != 0); // needs two files
}
