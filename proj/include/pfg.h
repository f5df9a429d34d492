#ifndef PFG_H
#define PFG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status values mirror the library's error codes; PFG_OK means the output
 * parameters were written. Anything else leaves them untouched and sets the
 * thread-local message readable through pfg_last_error. */
typedef enum pfg_status {
  PFG_OK = 0,
  PFG_PARSE_ERROR,
  PFG_BOUND_EXCEEDED,
  PFG_NOT_NORMAL,
  PFG_TRIVIAL_GROUP,
  PFG_NOT_SIMPLE,
  PFG_NOT_SOLVABLE,
  PFG_AMBIGUOUS,
  PFG_INCOMPATIBLE_SUBGROUP,
  PFG_INVALID_TOWER,
  PFG_PRECONDITION,
  PFG_INTERNAL
} pfg_status;

typedef struct pfg_group pfg_group;
typedef struct pfg_tower pfg_tower;
typedef struct pfg_closed_subgroup pfg_closed_subgroup;

/* Loaders read the strict JSON schemas and hand back owning handles. */
pfg_status pfg_group_load(const char* path, pfg_group** out);
pfg_status pfg_tower_load(const char* path, pfg_tower** out);
pfg_status pfg_closed_subgroup_load(const char* path, const pfg_tower* tower,
                                    pfg_closed_subgroup** out);

/* New handle holding only the first `levels` levels of the tower. */
pfg_status pfg_tower_truncate(const pfg_tower* t, uint64_t levels, pfg_tower** out);

void pfg_group_free(pfg_group* g);
void pfg_tower_free(pfg_tower* t);
void pfg_closed_subgroup_free(pfg_closed_subgroup* h);

/* Message for the calling thread's most recent failure. */
const char* pfg_last_error(void);

/* Reports are malloc'd JSON strings released with pfg_string_free. The
 * `name` arguments only tag the output. Check-style reports signal their
 * verdict through the JSON "pass" field, not the return status. */
pfg_status pfg_report_factors(const pfg_group* g, const char* name, char** out_json);
pfg_status pfg_report_series(const pfg_group* g, const char* name, uint64_t seed,
                             char** out_json);
pfg_status pfg_report_jh_verify(const pfg_group* g, const char* name, uint64_t trials,
                                uint64_t seed, char** out_json);
pfg_status pfg_report_identify(const pfg_group* g, const char* name, char** out_json);
pfg_status pfg_report_solvable(const pfg_group* g, const char* name, char** out_json);
pfg_status pfg_report_radical_witness(const pfg_group* g, const char* name, char** out_json);
pfg_status pfg_report_tower_validate(const pfg_tower* t, const char* name, char** out_json);
pfg_status pfg_report_tower_factors(const pfg_tower* t, const char* name, char** out_json);
pfg_status pfg_report_tower_series(const pfg_tower* t, const char* name, uint64_t seed,
                                   char** out_json);
pfg_status pfg_report_tower_match(const pfg_tower* t, const char* name, uint64_t seed,
                                  uint64_t trials, char** out_json);
pfg_status pfg_report_tower_prosolvable(const pfg_tower* t, const char* name, char** out_json);
pfg_status pfg_report_tower_anabelian(const pfg_tower* t, const char* name, char** out_json);
pfg_status pfg_report_tower_intersect(const pfg_closed_subgroup* h, const char* tower_name,
                                      const char* sub_name, uint64_t seed, char** out_json);
pfg_status pfg_report_section(const pfg_group* target, const char* target_name,
                              const pfg_group* ambient, const char* ambient_name,
                              char** out_json);
pfg_status pfg_report_sections(const pfg_group* g, const char* name, char** out_json);
pfg_status pfg_report_power_cover(const pfg_group* g, const char* name, uint64_t q, uint64_t m,
                                  char** out_json);
pfg_status pfg_report_perfectness(const pfg_group* g, const char* name, char** out_json);
pfg_status pfg_report_a5_check(const pfg_group* g, const char* name, char** out_json);

/* Serializes a loaded group back to its description JSON. */
pfg_status pfg_group_to_json(const pfg_group* g, char** out_json);

void pfg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
