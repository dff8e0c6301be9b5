#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contract_sched/schedule.hpp"

namespace contract_sched {

enum class Measure { Acceleration, Performance, Deficiency };
enum class Solver { Exact, Lpt };

std::string to_string(Measure measure);
std::string to_string(Solver solver);

/// Which critical times a measure is evaluated on. Times are inclusive
/// bounds; unserved times (some problem without a completed contract) are
/// skipped unless `include_unserved` is set, in which case they make the
/// measure infinite.
struct Window {
    std::optional<double> from;
    std::optional<double> to;
    bool include_unserved = false;
};

struct SeriesPoint {
    double time = 0.0;             // critical time G; evaluated at G^-
    std::vector<double> sorted;    // S_X at G^-, nondecreasing
    double reference = 0.0;        // smallest completed length, or OPT(S) for deficiency
    double ratio = 0.0;            // +inf when unserved
    bool served = false;
};

struct MeasureReport {
    Measure measure = Measure::Deficiency;
    double value = 0.0;                 // sup over the evaluated window
    std::optional<double> argmax_time;
    std::vector<SeriesPoint> series;    // every critical time in the window, sorted by time
    std::size_t unserved_windows = 0;   // critical times skipped because a problem was unserved
    bool exact = true;                  // false for the LPT-based deficiency estimate
    /// For exponential schedules: the measure's limit over the infinite schedule.
    std::optional<double> analytic_limit;
    /// For exponential schedules and deficiency: the greedy-based upper bound.
    std::optional<double> analytic_bound;
    std::optional<double> detected_base;
    std::string note;
};

/// sup over t of max_p t / l_{p,t}, evaluated right before each completion.
MeasureReport acceleration_ratio(const Schedule& schedule, const Window& window = {});

/// sup over t of (t / ceil(n/m)) / S_X^t(1) when m < n, t / S_X^t(1) otherwise.
MeasureReport performance_ratio(const Schedule& schedule, const Window& window = {});

/// sup over critical times G of G / OPT(S_X^{G^-}). With Solver::Lpt the
/// makespan comes from LPT and each ratio is scaled by 4/3 - 1/(3m), giving
/// an upper bound on the exact value; the report is marked non-exact.
MeasureReport deficiency(const Schedule& schedule, const Window& window = {}, Solver solver = Solver::Exact);

/// One processor only: sup over critical times of t / sum_p l_{p,t^-}, using
/// that the optimal makespan on one processor is the total length.
MeasureReport deficiency_single_processor(const Schedule& schedule, const Window& window = {});

MeasureReport evaluate(const Schedule& schedule, Measure measure, const Window& window = {},
                       Solver solver = Solver::Exact);

/// def(X, t^-) from its definition: the largest d such that d * S_X^{t^-}
/// fits on m processors within t, found by bisection with the exact makespan
/// solver as the feasibility test. Limited to n <= 10, m <= 3.
double deficiency_bruteforce_oracle(const Schedule& schedule, double t);

/// perf(X, t^-) from its definition: the longest common contract length L
/// such that n contracts of length L fit on m processors within t (bisection
/// on exact makespan), divided by S_X^{t^-}(1). Limited to n <= 10, m <= 3.
double performance_bruteforce_oracle(const Schedule& schedule, double t);

/// max_p t / l_{p,t} at an arbitrary time t, inclusive of contracts finishing at t.
double acceleration_at(const Schedule& schedule, double t);

/// Deficiency at an arbitrary time t (not necessarily critical), inclusive of
/// contracts finishing at t: t / OPT(S_X^t).
double deficiency_at(const Schedule& schedule, double t);

}  // namespace contract_sched
