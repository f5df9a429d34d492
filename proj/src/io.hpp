#pragma once

#include <json.hpp>
#include <string>

#include "group.hpp"
#include "sections.hpp"
#include "series.hpp"
#include "tower.hpp"

namespace pfg {

// Strict loaders. Unknown keys, wrong JSON types, and malformed cycle
// strings raise errc::parse; maps that fail to define a homomorphism raise
// errc::invalid_tower. File variants add stream errors as errc::parse.
Group group_from_json(const nlohmann::json& j);
Group load_group_file(const std::string& path);

// Inverse of the loader on every flavor: structural groups keep their
// builtin kind, explicit groups serialize as degree + generator cycles.
nlohmann::json group_to_json(const Group& g);

Tower tower_from_json(const nlohmann::json& j);
Tower load_tower_file(const std::string& path);

// Levels are generator lists over the tower's own level groups, which must
// be explicit. An empty list names the trivial subgroup.
ClosedSubgroup closed_subgroup_from_json(const nlohmann::json& j, const Tower& t);
ClosedSubgroup load_closed_subgroup_file(const std::string& path, const Tower& t);

// Report builders shared by the C API and the CLI. Objects keep sorted
// keys, every number is an integer, and fixed inputs give identical bytes.
// The "pass" field drives the caller's exit code; answer-style reports set
// it to true unconditionally.
nlohmann::json report_factors(const std::string& name, const Group& g);
nlohmann::json report_series(const std::string& name, const Group& g, uint64_t seed);
nlohmann::json report_jh_verify(const std::string& name, const Group& g, uint64_t trials,
                                uint64_t seed);
nlohmann::json report_identify(const std::string& name, const Group& g);
nlohmann::json report_solvable(const std::string& name, const Group& g);
nlohmann::json report_radical_witness(const std::string& name, const Group& g);
nlohmann::json report_tower_validate(const std::string& name, const Tower& t);
nlohmann::json report_tower_factors(const std::string& name, const Tower& t);
nlohmann::json report_tower_series(const std::string& name, const Tower& t, uint64_t seed);
nlohmann::json report_tower_match(const std::string& name, const Tower& t, uint64_t seed,
                                  uint64_t trials);
nlohmann::json report_tower_prosolvable(const std::string& name, const Tower& t);
nlohmann::json report_tower_anabelian(const std::string& name, const Tower& t);
nlohmann::json report_tower_intersect(const std::string& name, const std::string& sub_name,
                                      const ClosedSubgroup& h, uint64_t seed);
nlohmann::json report_section(const std::string& target_name, const Group& target,
                              const std::string& ambient_name, const Group& ambient);
nlohmann::json report_sections(const std::string& name, const Group& g);
nlohmann::json report_power_cover(const std::string& name, const Group& g, uint64_t q,
                                  uint64_t m);
nlohmann::json report_perfectness(const std::string& name, const Group& g);
nlohmann::json report_a5_check(const std::string& name, const Group& g);

} // namespace pfg
