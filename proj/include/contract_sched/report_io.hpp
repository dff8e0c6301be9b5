#pragma once

#include <nlohmann/json.hpp>

#include "contract_sched/bounds.hpp"
#include "contract_sched/makespan.hpp"
#include "contract_sched/metrics.hpp"
#include "contract_sched/transforms.hpp"

namespace contract_sched {

// Infinite values are written as the string "inf"; JSON has no infinity.
nlohmann::json number_or_inf(double v);

nlohmann::json to_json(const MeasureReport& report, bool with_series = false);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const Assignment& assignment);
nlohmann::json to_json(const TransformStep& step);
nlohmann::json to_json(const NormalizationTrace& trace);

}  // namespace contract_sched
