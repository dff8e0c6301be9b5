#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "contract_sched/schedule.hpp"

namespace contract_sched {

// {"n": int, "m": int, "contracts": [{"problem", "processor", "length"}, ...]}
// Doubles are written in shortest round-trip form, so read(write(s)) == s.
nlohmann::json to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j);

std::string write_schedule(const Schedule& schedule);
Schedule read_schedule(const std::string& text);

Schedule load_schedule(const std::filesystem::path& path);
void save_schedule(const Schedule& schedule, const std::filesystem::path& path);

}  // namespace contract_sched
