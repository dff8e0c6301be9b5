#include "contract_sched/report_io.hpp"

#include <cmath>

#include "contract_sched/schedule_io.hpp"

namespace contract_sched {

nlohmann::json number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

namespace {

template <class T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

}  // namespace

nlohmann::json to_json(const MeasureReport& report, bool with_series) {
    nlohmann::json j;
    j["measure"] = to_string(report.measure);
    j["value"] = number_or_inf(report.value);
    j["argmax_time"] = report.argmax_time ? nlohmann::json(*report.argmax_time) : nlohmann::json(nullptr);
    j["critical_times"] = report.series.size();
    j["unserved_windows"] = report.unserved_windows;
    j["exact"] = report.exact;
    put(j, "analytic_limit", report.analytic_limit);
    put(j, "analytic_bound", report.analytic_bound);
    put(j, "detected_base", report.detected_base);
    j["note"] = report.note;
    if (with_series) {
        auto& series = j["series"] = nlohmann::json::array();
        for (const auto& p : report.series)
            series.push_back({{"time", p.time},
                              {"sorted", p.sorted},
                              {"reference", p.reference},
                              {"ratio", number_or_inf(p.ratio)},
                              {"served", p.served}});
    }
    return j;
}

nlohmann::json to_json(const BoundReport& report) {
    nlohmann::json params = nlohmann::json::object();
    const auto& p = report.params;
    put(params, "n", p.n);
    put(params, "m", p.m);
    put(params, "b", p.b);
    put(params, "gamma", p.gamma);
    put(params, "rho", p.rho);
    put(params, "kappa", p.kappa);
    put(params, "lambda", p.lambda);
    put(params, "beta", p.beta);
    put(params, "a", p.a);

    nlohmann::json forms = nlohmann::json::object();
    for (const auto& [name, value] : report.forms) forms[name] = value;
    return {{"name", report.name},
            {"measure", to_string(report.measure)},
            {"kind", to_string(report.kind)},
            {"value", number_or_inf(report.value)},
            {"params", std::move(params)},
            {"forms", std::move(forms)}};
}

nlohmann::json to_json(const Assignment& assignment) {
    return {{"makespan", assignment.makespan},
            {"loads", assignment.loads},
            {"assignment", assignment.processor_of},
            {"optimal", assignment.optimal}};
}

nlohmann::json to_json(const TransformStep& step) {
    nlohmann::json j{{"kind", to_string(step.kind)},
                     {"index", step.index},
                     {"time", step.time},
                     {"condition_held", step.condition_held},
                     {"deficiency_before", number_or_inf(step.deficiency_before)},
                     {"deficiency_after", number_or_inf(step.deficiency_after)}};
    put(j, "problem_from", step.problem_from);
    put(j, "problem_to", step.problem_to);
    if (step.q_before) j["q_before"] = number_or_inf(*step.q_before);
    if (step.q_after) j["q_after"] = number_or_inf(*step.q_after);
    return j;
}

nlohmann::json to_json(const NormalizationTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps) steps.push_back(to_json(s));
    return {{"input", to_json(trace.input)}, {"output", to_json(trace.output)}, {"steps", std::move(steps)}};
}

}  // namespace contract_sched
