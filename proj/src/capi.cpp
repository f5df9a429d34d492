#include "pfg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "error.hpp"
#include "io.hpp"

struct pfg_group {
  pfg::Group g;
};
struct pfg_tower {
  pfg::Tower t;
};
struct pfg_closed_subgroup {
  pfg::ClosedSubgroup h;
};

namespace {

thread_local std::string tl_error;

pfg_status to_status(pfg::errc c) {
  switch (c) {
    case pfg::errc::parse: return PFG_PARSE_ERROR;
    case pfg::errc::bound_exceeded: return PFG_BOUND_EXCEEDED;
    case pfg::errc::not_normal: return PFG_NOT_NORMAL;
    case pfg::errc::trivial_group: return PFG_TRIVIAL_GROUP;
    case pfg::errc::not_simple: return PFG_NOT_SIMPLE;
    case pfg::errc::not_solvable: return PFG_NOT_SOLVABLE;
    case pfg::errc::ambiguous: return PFG_AMBIGUOUS;
    case pfg::errc::incompatible_subgroup: return PFG_INCOMPATIBLE_SUBGROUP;
    case pfg::errc::invalid_tower: return PFG_INVALID_TOWER;
    case pfg::errc::precondition: return PFG_PRECONDITION;
  }
  return PFG_INTERNAL;
}

template <typename F>
pfg_status wrap(F&& f) noexcept {
  try {
    f();
    return PFG_OK;
  } catch (const pfg::Error& e) {
    tl_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    tl_error = e.what();
    return PFG_INTERNAL;
  } catch (...) {
    tl_error = "unknown failure";
    return PFG_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pfg_status fail_arg(const char* what) {
  tl_error = what;
  return PFG_PRECONDITION;
}

} // namespace

extern "C" {

pfg_status pfg_group_load(const char* path, pfg_group** out) {
  if (!path || !out) return fail_arg("null argument");
  return wrap([&] { *out = new pfg_group{pfg::load_group_file(path)}; });
}

pfg_status pfg_tower_load(const char* path, pfg_tower** out) {
  if (!path || !out) return fail_arg("null argument");
  return wrap([&] { *out = new pfg_tower{pfg::load_tower_file(path)}; });
}

pfg_status pfg_closed_subgroup_load(const char* path, const pfg_tower* tower,
                                    pfg_closed_subgroup** out) {
  if (!path || !tower || !out) return fail_arg("null argument");
  return wrap(
      [&] { *out = new pfg_closed_subgroup{pfg::load_closed_subgroup_file(path, tower->t)}; });
}

pfg_status pfg_tower_truncate(const pfg_tower* t, uint64_t levels, pfg_tower** out) {
  if (!t || !out) return fail_arg("null argument");
  return wrap([&] { *out = new pfg_tower{t->t.prefix(static_cast<size_t>(levels))}; });
}

void pfg_group_free(pfg_group* g) { delete g; }
void pfg_tower_free(pfg_tower* t) { delete t; }
void pfg_closed_subgroup_free(pfg_closed_subgroup* h) { delete h; }

const char* pfg_last_error(void) { return tl_error.c_str(); }

void pfg_string_free(char* s) { std::free(s); }

pfg_status pfg_group_to_json(const pfg_group* g, char** out_json) {
  if (!g || !out_json) return fail_arg("null argument");
  return wrap([&] { *out_json = dup_string(pfg::group_to_json(g->g).dump(2)); });
}

} // extern "C"

namespace {

// Every report entry point shares the shape: guard nulls, build, dump.
template <typename F>
pfg_status report(char** out_json, F&& build) {
  if (!out_json) return fail_arg("null argument");
  return wrap([&] { *out_json = dup_string(build().dump(2)); });
}

} // namespace

extern "C" {

pfg_status pfg_report_factors(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_factors(name, g->g); });
}

pfg_status pfg_report_series(const pfg_group* g, const char* name, uint64_t seed,
                             char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_series(name, g->g, seed); });
}

pfg_status pfg_report_jh_verify(const pfg_group* g, const char* name, uint64_t trials,
                                uint64_t seed, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_jh_verify(name, g->g, trials, seed); });
}

pfg_status pfg_report_identify(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_identify(name, g->g); });
}

pfg_status pfg_report_solvable(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_solvable(name, g->g); });
}

pfg_status pfg_report_radical_witness(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_radical_witness(name, g->g); });
}

pfg_status pfg_report_tower_validate(const pfg_tower* t, const char* name, char** out_json) {
  if (!t || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_tower_validate(name, t->t); });
}

pfg_status pfg_report_tower_factors(const pfg_tower* t, const char* name, char** out_json) {
  if (!t || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_tower_factors(name, t->t); });
}

pfg_status pfg_report_tower_series(const pfg_tower* t, const char* name, uint64_t seed,
                                   char** out_json) {
  if (!t || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_tower_series(name, t->t, seed); });
}

pfg_status pfg_report_tower_match(const pfg_tower* t, const char* name, uint64_t seed,
                                  uint64_t trials, char** out_json) {
  if (!t || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_tower_match(name, t->t, seed, trials); });
}

pfg_status pfg_report_tower_prosolvable(const pfg_tower* t, const char* name, char** out_json) {
  if (!t || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_tower_prosolvable(name, t->t); });
}

pfg_status pfg_report_tower_anabelian(const pfg_tower* t, const char* name, char** out_json) {
  if (!t || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_tower_anabelian(name, t->t); });
}

pfg_status pfg_report_tower_intersect(const pfg_closed_subgroup* h, const char* tower_name,
                                      const char* sub_name, uint64_t seed, char** out_json) {
  if (!h || !tower_name || !sub_name) return fail_arg("null argument");
  return report(out_json,
                [&] { return pfg::report_tower_intersect(tower_name, sub_name, h->h, seed); });
}

pfg_status pfg_report_section(const pfg_group* target, const char* target_name,
                              const pfg_group* ambient, const char* ambient_name,
                              char** out_json) {
  if (!target || !target_name || !ambient || !ambient_name)
    return fail_arg("null argument");
  return report(out_json, [&] {
    return pfg::report_section(target_name, target->g, ambient_name, ambient->g);
  });
}

pfg_status pfg_report_sections(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_sections(name, g->g); });
}

pfg_status pfg_report_power_cover(const pfg_group* g, const char* name, uint64_t q, uint64_t m,
                                  char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_power_cover(name, g->g, q, m); });
}

pfg_status pfg_report_perfectness(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_perfectness(name, g->g); });
}

pfg_status pfg_report_a5_check(const pfg_group* g, const char* name, char** out_json) {
  if (!g || !name) return fail_arg("null argument");
  return report(out_json, [&] { return pfg::report_a5_check(name, g->g); });
}

} // extern "C"
