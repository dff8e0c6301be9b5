#include "contract_sched/schedule_io.hpp"

#include <fstream>
#include <sstream>

namespace contract_sched {

nlohmann::json to_json(const Schedule& schedule) {
    nlohmann::json contracts = nlohmann::json::array();
    for (const auto& c : schedule.contracts())
        contracts.push_back({{"problem", c.problem}, {"processor", c.processor}, {"length", c.length}});
    return {{"n", schedule.n_problems()}, {"m", schedule.m_processors()}, {"contracts", std::move(contracts)}};
}

namespace {

std::size_t read_index(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw DomainError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

Schedule schedule_from_json(const nlohmann::json& j) {
    try {
        const auto n = read_index(j, "n");
        const auto m = read_index(j, "m");
        std::vector<Contract> contracts;
        for (const auto& c : j.at("contracts")) {
            const auto& len = c.at("length");
            if (!len.is_number()) throw DomainError("field 'length' must be a number");
            contracts.push_back({read_index(c, "problem"), read_index(c, "processor"), len.get<double>()});
        }
        return Schedule(n, m, std::move(contracts));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed schedule JSON: ") + e.what());
    }
}

std::string write_schedule(const Schedule& schedule) { return to_json(schedule).dump(2) + "\n"; }

Schedule read_schedule(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("schedule is not valid JSON: ") + e.what());
    }
    return schedule_from_json(j);
}

Schedule load_schedule(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open schedule file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return read_schedule(buf.str());
}

void save_schedule(const Schedule& schedule, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write schedule file " + path.string());
    out << write_schedule(schedule);
}

}  // namespace contract_sched
