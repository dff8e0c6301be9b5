#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contract_sched/schedule.hpp"

namespace contract_sched {

/// One rewrite applied to a single-processor schedule.
struct TransformStep {
    enum class Kind {
        DominatedRemoval,  // contract not longer than an earlier one for its problem
        Swap,              // problems exchanged on every contract from `index` on
        PairRemoval,       // first contract of a same-problem run dropped (Q' <= Q)
        PairCertified,     // pair kept because its second contract reaches the other problem's length
    };
    Kind kind = Kind::DominatedRemoval;
    std::size_t index = 0;  // contract position in the schedule the step was applied to
    double time = 0.0;      // start time of that contract
    std::optional<std::size_t> problem_from, problem_to;  // swaps: violating problem j, least worked i
    std::optional<double> q_before, q_after;               // pair steps: Q_X and Q_X'
    bool condition_held = true;
    double deficiency_before = 0.0;
    double deficiency_after = 0.0;
};

std::string to_string(TransformStep::Kind kind);

struct NormalizationTrace {
    Schedule input;
    Schedule output;
    std::vector<TransformStep> steps;

    bool identity() const { return steps.empty(); }
};

/// Drops every contract that is not strictly longer than an earlier contract
/// for the same problem. Deficiency never increases. Requires m = 1.
NormalizationTrace remove_dominated(const Schedule& schedule);

/// True when every contract goes to the least worked problem at its start
/// time, lowest index among ties. Requires m = 1.
bool is_normalized(const Schedule& schedule);

/// Longest run of consecutive contracts for a single problem.
std::size_t longest_run(const Schedule& schedule);

/// Rewrites a single-processor schedule so that every contract starts for a
/// least worked problem. At the first violating start T (contract for j while
/// i has l_{i,T} < l_{j,T}), problems i and j are exchanged on every contract
/// from T on. Dominated contracts are dropped first and after every swap.
NormalizationTrace normalize(const Schedule& schedule);

/// Two problems on one processor, normalized input. For the first pair of
/// every run of three or more contracts for one problem, drops the first
/// contract when that does not raise the worst ratio among the affected
/// interruptions (Q_X' <= Q_X); otherwise records whether the second contract
/// is at least as long as the other problem's longest.
NormalizationTrace reduce_consecutive_pairs(const Schedule& schedule);

}  // namespace contract_sched
