#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace contract_sched {

struct VerifyOptions {
    std::uint64_t seed = 20240611;
    /// Replaces every check's own tolerance when set.
    std::optional<double> tolerance;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Reported but not counted towards the overall status.
    bool informational = false;
    double seconds = 0.0;
};

/// The ten acceptance criteria, in order.
std::vector<CheckResult> acceptance_checks(const VerifyOptions& options);

/// Invariant and property suites of every module, plus informational checks.
std::vector<CheckResult> property_checks(const VerifyOptions& options);

/// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& checks);

nlohmann::json to_json(const std::vector<CheckResult>& checks, const VerifyOptions& options);

}  // namespace contract_sched
