#include "contract_sched/transforms.hpp"

#include <algorithm>
#include <limits>

#include "contract_sched/metrics.hpp"

namespace contract_sched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_single_processor(const Schedule& s) {
    if (s.m_processors() != 1) throw DomainError("schedule transforms need a single processor (m = 1)");
}

double single_deficiency(const Schedule& s) { return deficiency_single_processor(s).value; }

Schedule rebuild(const Schedule& like, std::vector<Contract> contracts) {
    return Schedule(like.n_problems(), like.m_processors(), std::move(contracts));
}

Schedule without(const Schedule& s, std::size_t index) {
    std::vector<Contract> contracts(s.contracts().begin(), s.contracts().end());
    contracts.erase(contracts.begin() + static_cast<std::ptrdiff_t>(index));
    return rebuild(s, std::move(contracts));
}

// l_{p,T} for every problem at the start of contract `index` (single processor:
// exactly the contracts before it have completed).
std::vector<double> worked_before(const Schedule& s, std::size_t index) {
    std::vector<double> l(s.n_problems(), 0.0);
    for (std::size_t i = 0; i < index; ++i) l[s[i].problem] = std::max(l[s[i].problem], s[i].length);
    return l;
}

std::size_t least_worked(const std::vector<double>& l) {
    return static_cast<std::size_t>(std::min_element(l.begin(), l.end()) - l.begin());
}

std::optional<std::size_t> first_dominated(const Schedule& s) {
    std::vector<double> longest(s.n_problems(), 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& c = s[i];
        if (c.length <= longest[c.problem]) return i;
        longest[c.problem] = c.length;
    }
    return std::nullopt;
}

Schedule prune_dominated(Schedule current, std::vector<TransformStep>& steps) {
    while (auto index = first_dominated(current)) {
        TransformStep step;
        step.kind = TransformStep::Kind::DominatedRemoval;
        step.index = *index;
        step.time = current.start_time(*index);
        step.deficiency_before = single_deficiency(current);
        current = without(current, *index);
        step.deficiency_after = single_deficiency(current);
        steps.push_back(step);
    }
    return current;
}

std::optional<std::size_t> first_violation(const Schedule& s) {
    std::vector<double> l(s.n_problems(), 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].problem != least_worked(l)) return i;
        l[s[i].problem] = std::max(l[s[i].problem], s[i].length);
    }
    return std::nullopt;
}

// t / (a + b), infinite when either problem is still unserved.
double pair_ratio(double t, double a, double b) { return a > 0.0 && b > 0.0 ? t / (a + b) : kInf; }

}  // namespace

std::string to_string(TransformStep::Kind kind) {
    switch (kind) {
        case TransformStep::Kind::DominatedRemoval: return "dominated-removal";
        case TransformStep::Kind::Swap: return "swap";
        case TransformStep::Kind::PairRemoval: return "pair-removal";
        case TransformStep::Kind::PairCertified: return "pair-certified";
    }
    return "?";
}

NormalizationTrace remove_dominated(const Schedule& schedule) {
    require_single_processor(schedule);
    std::vector<TransformStep> steps;
    auto output = prune_dominated(schedule, steps);
    return {schedule, std::move(output), std::move(steps)};
}

bool is_normalized(const Schedule& schedule) {
    require_single_processor(schedule);
    return !first_violation(schedule).has_value();
}

std::size_t longest_run(const Schedule& schedule) {
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        run = (i > 0 && schedule[i].problem == schedule[i - 1].problem) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

NormalizationTrace normalize(const Schedule& schedule) {
    require_single_processor(schedule);
    std::vector<TransformStep> steps;
    Schedule current = prune_dominated(schedule, steps);

    while (auto index = first_violation(current)) {
        const auto l = worked_before(current, *index);
        const std::size_t least = least_worked(l);
        const std::size_t assigned = current[*index].problem;

        TransformStep step;
        step.kind = TransformStep::Kind::Swap;
        step.index = *index;
        step.time = current.start_time(*index);
        step.problem_from = assigned;
        step.problem_to = least;
        step.condition_held = l[least] <= l[assigned];
        step.deficiency_before = single_deficiency(current);

        std::vector<Contract> contracts(current.contracts().begin(), current.contracts().end());
        for (std::size_t i = *index; i < contracts.size(); ++i) {
            if (contracts[i].problem == assigned)
                contracts[i].problem = least;
            else if (contracts[i].problem == least)
                contracts[i].problem = assigned;
        }
        current = rebuild(current, std::move(contracts));
        step.deficiency_after = single_deficiency(current);
        steps.push_back(step);

        current = prune_dominated(std::move(current), steps);
    }
    return {schedule, std::move(current), std::move(steps)};
}

NormalizationTrace reduce_consecutive_pairs(const Schedule& schedule) {
    require_single_processor(schedule);
    if (schedule.n_problems() != 2) throw DomainError("reduce_consecutive_pairs needs exactly two problems");
    std::vector<TransformStep> steps;
    Schedule current = prune_dominated(schedule, steps);
    if (!is_normalized(current)) throw DomainError("reduce_consecutive_pairs needs a normalized schedule");

    std::size_t j = 0;
    while (j + 2 < current.size()) {
        const std::size_t p = current[j].problem;
        if (current[j + 1].problem != p || current[j + 2].problem != p) {
            ++j;
            continue;
        }
        const std::size_t other = 1 - p;
        const double t = current.start_time(j);
        const double first = current[j].length;
        const double second = current[j + 1].length;

        // Interruption at t^- is shared by both schedules.
        double at_t_minus = -kInf;
        if (t > 0.0) {
            const auto before = snapshot_before(current, t);
            at_t_minus = pair_ratio(t, before.longest()[0], before.longest()[1]);
        }
        const auto l = worked_before(current, j);
        const double q_keep = std::max({at_t_minus, pair_ratio(t + first, l[p], l[other]),
                                        pair_ratio(t + first + second, first, l[other])});
        const double q_drop = std::max(at_t_minus, pair_ratio(t + second, l[p], l[other]));

        TransformStep step;
        step.index = j;
        step.time = t;
        step.q_before = q_keep;
        step.q_after = q_drop;
        step.deficiency_before = single_deficiency(current);
        if (q_drop <= q_keep || approx_le(q_drop, q_keep)) {
            step.kind = TransformStep::Kind::PairRemoval;
            current = without(current, j);
            step.deficiency_after = single_deficiency(current);
        } else {
            step.kind = TransformStep::Kind::PairCertified;
            step.condition_held = approx_le(l[other], second);
            step.deficiency_after = step.deficiency_before;
            ++j;
        }
        steps.push_back(step);
    }
    return {schedule, std::move(current), std::move(steps)};
}

}  // namespace contract_sched
