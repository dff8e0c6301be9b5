#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Minimum makespan by enumerating all m^n assignments.
inline double enumerate_makespan(const std::vector<double>& sizes, std::size_t m) {
    const std::size_t n = sizes.size();
    if (n == 0) return 0.0;
    std::vector<std::size_t> choice(n, 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        std::vector<double> load(m, 0.0);
        for (std::size_t j = 0; j < n; ++j) load[choice[j]] += sizes[j];
        best = std::min(best, *std::max_element(load.begin(), load.end()));
        std::size_t pos = 0;
        while (pos < n && ++choice[pos] == m) choice[pos++] = 0;
        if (pos == n) break;
    }
    return best;
}

struct Job {
    std::size_t problem, processor;
    double length;
};

// Finish times from per-processor prefix sums.
inline std::vector<double> finish_times(const std::vector<Job>& jobs, std::size_t m) {
    std::vector<double> clock(m, 0.0), out;
    for (const auto& j : jobs) out.push_back(clock[j.processor] += j.length);
    return out;
}

// Per-problem longest length among jobs whose finish time is < t (strict)
// or <= t.
inline std::vector<double> longest(const std::vector<Job>& jobs, std::size_t n, std::size_t m, double t,
                                   bool strict) {
    const auto f = finish_times(jobs, m);
    std::vector<double> l(n, 0.0);
    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (strict ? f[i] < t : f[i] <= t) l[jobs[i].problem] = std::max(l[jobs[i].problem], jobs[i].length);
    return l;
}

// Minimizer of a^{p+q}/(a^q - 1) on a > 1: dense scan, then bisection on the
// numerator of the derivative, p a^q - (p + q).
inline double minimize_rational(double p, double q) {
    const auto f = [&](double a) { return std::pow(a, p + q) / (std::pow(a, q) - 1.0); };
    double best_a = 1.0001, best = f(best_a);
    for (double a = 1.0001; a < 16.0; a += 0.0005)
        if (f(a) < best) best = f(a), best_a = a;
    double lo = best_a - 0.001, hi = best_a + 0.001;
    const auto g = [&](double a) { return p * std::pow(a, q) - (p + q); };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

}  // namespace oracle
