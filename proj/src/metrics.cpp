#include "contract_sched/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contract_sched/bounds.hpp"
#include "contract_sched/generators.hpp"
#include "contract_sched/makespan.hpp"

namespace contract_sched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t offline_slots(const Schedule& s) { return (s.n_problems() + s.m_processors() - 1) / s.m_processors(); }

// Graham's bound for LPT: LPT <= (4/3 - 1/(3m)) OPT.
double lpt_factor(std::size_t m) { return 4.0 / 3.0 - 1.0 / (3.0 * static_cast<double>(m)); }

struct Reference {
    double reference;
    double ratio;
    bool exact = true;
};

template <class Evaluate>
MeasureReport sweep(const Schedule& schedule, const Window& window, Measure measure, Evaluate&& evaluate) {
    MeasureReport report;
    report.measure = measure;
    double best = -kInf;
    bool any_served = false;
    bool unserved_included = false;

    for (double t : critical_times(schedule)) {
        if (window.from && t < *window.from && !approx_eq(t, *window.from)) continue;
        if (window.to && t > *window.to && !approx_eq(t, *window.to)) continue;

        const auto snap = snapshot_before(schedule, t);
        SeriesPoint point;
        point.time = t;
        point.sorted.assign(snap.sorted().begin(), snap.sorted().end());
        point.served = snap.complete();
        if (!point.served) {
            point.ratio = kInf;
            ++report.unserved_windows;
            if (window.include_unserved && !unserved_included) {
                unserved_included = true;
                report.argmax_time = t;
            }
        } else {
            const Reference r = evaluate(snap);
            point.reference = r.reference;
            point.ratio = r.ratio;
            report.exact = report.exact && r.exact;
            any_served = true;
            if (!unserved_included && point.ratio > best) {
                best = point.ratio;
                report.argmax_time = t;
            }
        }
        report.series.push_back(std::move(point));
    }

    if (unserved_included) {
        report.value = kInf;
        report.note = "window includes times where some problem has no completed contract";
    } else if (!any_served) {
        report.value = kInf;
        report.argmax_time.reset();
        report.note = "no critical time in the window has every problem served";
    } else {
        report.value = best;
        report.note = "supremum over a finite prefix";
    }
    return report;
}

void attach_exponential_limits(const Schedule& schedule, MeasureReport& report) {
    const auto base = detect_exponential_base(schedule);
    if (!base) return;
    const double b = *base;
    const std::size_t n = schedule.n_problems(), m = schedule.m_processors();
    report.detected_base = b;
    const double bm = std::pow(b, static_cast<double>(m));
    // lim_k G_{n+k} / b^k
    const double finish_scale = std::pow(b, static_cast<double>(n + m)) / (bm - 1.0);

    switch (report.measure) {
        case Measure::Acceleration: report.analytic_limit = finish_scale; break;
        case Measure::Performance:
            report.analytic_limit = finish_scale / static_cast<double>(m < n ? offline_slots(schedule) : 1);
            break;
        case Measure::Deficiency: {
            report.analytic_bound = deficiency_upper_bound(n, m, b).value;
            if (n <= kExactJobLimit) {
                std::vector<double> unit(n);
                for (std::size_t i = 0; i < n; ++i) unit[i] = std::pow(b, static_cast<double>(i));
                report.analytic_limit = finish_scale / exact_makespan(MakespanInstance(std::move(unit), m)).makespan;
            }
            break;
        }
    }
    report.note += "; exponential schedule, analytic_limit is the value over the infinite schedule";
}

}  // namespace

std::string to_string(Measure measure) {
    switch (measure) {
        case Measure::Acceleration: return "acc";
        case Measure::Performance: return "perf";
        case Measure::Deficiency: return "def";
    }
    return "?";
}

std::string to_string(Solver solver) { return solver == Solver::Exact ? "exact" : "lpt"; }

MeasureReport acceleration_ratio(const Schedule& schedule, const Window& window) {
    auto report = sweep(schedule, window, Measure::Acceleration, [](const Snapshot& s) {
        return Reference{s.sorted_at(1), s.time() / s.sorted_at(1)};
    });
    attach_exponential_limits(schedule, report);
    return report;
}

MeasureReport performance_ratio(const Schedule& schedule, const Window& window) {
    const double slots = static_cast<double>(offline_slots(schedule));
    auto report = sweep(schedule, window, Measure::Performance, [slots](const Snapshot& s) {
        return Reference{s.sorted_at(1), (s.time() / slots) / s.sorted_at(1)};
    });
    attach_exponential_limits(schedule, report);
    return report;
}

MeasureReport deficiency(const Schedule& schedule, const Window& window, Solver solver) {
    const std::size_t m = schedule.m_processors();
    auto report = sweep(schedule, window, Measure::Deficiency, [m, solver](const Snapshot& s) {
        MakespanInstance instance(std::vector<double>(s.sorted().begin(), s.sorted().end()), m);
        if (solver == Solver::Exact) {
            const double opt = exact_makespan(instance).makespan;
            return Reference{opt, s.time() / opt};
        }
        const auto lpt = lpt_makespan(instance);
        const double factor = lpt.optimal ? 1.0 : lpt_factor(m);
        return Reference{lpt.makespan, factor * s.time() / lpt.makespan, lpt.optimal};
    });
    if (solver == Solver::Lpt) {
        report.exact = false;
        report.note += "; LPT estimate scaled by 4/3 - 1/(3m), an upper bound on the exact value";
    }
    attach_exponential_limits(schedule, report);
    return report;
}

MeasureReport deficiency_single_processor(const Schedule& schedule, const Window& window) {
    if (schedule.m_processors() != 1) throw DomainError("single-processor deficiency needs m = 1");
    return sweep(schedule, window, Measure::Deficiency, [](const Snapshot& s) {
        double total = 0.0;
        for (double l : s.longest()) total += l;
        return Reference{total, s.time() / total};
    });
}

MeasureReport evaluate(const Schedule& schedule, Measure measure, const Window& window, Solver solver) {
    switch (measure) {
        case Measure::Acceleration: return acceleration_ratio(schedule, window);
        case Measure::Performance: return performance_ratio(schedule, window);
        case Measure::Deficiency: return deficiency(schedule, window, solver);
    }
    throw DomainError("unknown measure");
}

namespace {

void require_oracle_size(const Schedule& schedule) {
    if (schedule.n_problems() > 10 || schedule.m_processors() > 3)
        throw DomainError("brute-force oracle limited to n <= 10, m <= 3");
}

// Largest x in [lo, hi] with feasible(x), given feasible(lo). Bisection.
template <class Feasible>
double largest_feasible(double lo, double hi, Feasible&& feasible) {
    if (feasible(hi)) return hi;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

double deficiency_bruteforce_oracle(const Schedule& schedule, double t) {
    require_oracle_size(schedule);
    const auto snap = snapshot_before(schedule, t);
    if (!snap.complete()) return kInf;
    const auto sizes = snap.sorted();
    double total = 0.0;
    for (double x : sizes) total += x;
    const std::size_t m = schedule.m_processors();

    // d * S must pack into m processors within t. d = t/sum always fits;
    // nothing above t/max(S) does.
    return largest_feasible(t / total, t / sizes.back(), [&](double d) {
        std::vector<double> scaled(sizes.begin(), sizes.end());
        for (double& x : scaled) x *= d;
        return exact_makespan(MakespanInstance(std::move(scaled), m)).makespan <= t;
    });
}

double performance_bruteforce_oracle(const Schedule& schedule, double t) {
    require_oracle_size(schedule);
    const auto snap = snapshot_before(schedule, t);
    if (!snap.complete()) return kInf;
    const std::size_t n = schedule.n_problems(), m = schedule.m_processors();

    // n equal contracts of length L: all on one processor always fits at L = t/n.
    const double best = largest_feasible(t / static_cast<double>(n), t, [&](double length) {
        return exact_makespan(MakespanInstance(std::vector<double>(n, length), m)).makespan <= t;
    });
    return best / snap.sorted_at(1);
}

double acceleration_at(const Schedule& schedule, double t) {
    const auto snap = snapshot(schedule, t);
    if (!snap.complete()) return kInf;
    return t / snap.sorted_at(1);
}

double deficiency_at(const Schedule& schedule, double t) {
    const auto snap = snapshot(schedule, t);
    if (!snap.complete()) return kInf;
    MakespanInstance instance(std::vector<double>(snap.sorted().begin(), snap.sorted().end()), schedule.m_processors());
    return t / exact_makespan(instance).makespan;
}

}  // namespace contract_sched
