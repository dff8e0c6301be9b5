#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contract_sched/metrics.hpp"

namespace contract_sched {

enum class BoundKind { Upper, Lower };

std::string to_string(BoundKind kind);

/// Parameters a bound was evaluated at. Only the ones that apply are set.
struct BoundParams {
    std::optional<std::size_t> n, m;
    std::optional<double> b;
    std::optional<std::size_t> gamma, rho;
    std::optional<double> kappa, lambda, beta, a;
};

struct BoundReport {
    std::string name;
    Measure measure = Measure::Deficiency;
    BoundKind kind = BoundKind::Upper;
    double value = 0.0;
    BoundParams params;
    /// Equivalent rewritten forms of the value, where the bound has them.
    std::vector<std::pair<std::string, double>> forms;
};

/// Greedy-to-optimal makespan factor on geometric instances:
/// 1 when n <= m (one job per processor), otherwise min{2 - 1/m, b^m/(b^m - 1)}.
double greedy_ratio_lambda(std::size_t n, std::size_t m, double b);

/// lambda * b^{n+m} / (b^{n+m-1} - b^gamma), an upper bound on the deficiency
/// of the exponential schedule with base b.
BoundReport deficiency_upper_bound(std::size_t n, std::size_t m, double b);

/// deficiency_upper_bound at the deficiency-optimal base beta.
BoundReport deficiency_upper_bound_at_beta(std::size_t n, std::size_t m);

/// The same bound as a function of (m, rho) only, with beta = (y+1)^{1/y},
/// y = m(rho+1). For rho >= 1 this is the n > m surface.
double deficiency_bound_surface(std::size_t m, std::size_t rho);

/// (n+1)^{(n+1)/n} / n on one processor.
BoundReport best_exponential_deficiency_single_processor(std::size_t n);

/// (n+1)/n, any schedule on one processor.
BoundReport deficiency_lower_bound_general(std::size_t n);

/// Round-robin schedules on one processor; equals the best exponential value.
BoundReport roundrobin_lower_bound(std::size_t n);

/// min over a > 1 of a^4/(a^3 - 1) = 2^{8/3}/3 at a = 2^{2/3}; two problems, one processor.
BoundReport two_problem_lower_bound();

/// (n/m)((n+m)/n)^{(n+m)/m}, attained at a = ((m+n)/n)^{1/m}.
BoundReport cyclic_acceleration_lower_bound(std::size_t n, std::size_t m);

/// Performance ratio of the acceleration-optimal schedule.
BoundReport performance_ratio_closed_form(std::size_t n, std::size_t m);

/// Worst-case sup forms a^p / (1 - a^{-q}) left after eliminating the sup
/// over k from the geometric-sequence functionals of the lower-bound proofs.
struct GeometricFunctional {
    enum class Family {
        RoundRobinDeficiency,  // a^{n+1}/(a^n - 1): p = 1, q = n
        CyclicAcceleration,    // a^{n+m}/(a^m - 1): p = n, q = m
        TwoProblemDeficiency,  // a^4/(a^3 - 1):     p = 1, q = 3
    };
    Family family = Family::RoundRobinDeficiency;
    std::size_t n = 1;
    std::size_t m = 1;

    /// Value of the sup form at a > 1.
    double operator()(double a) const;
    /// sup over k <= k_max of F_k evaluated on the sequence (1, a, a^2, ...),
    /// by explicit summation.
    double direct_sup(double a, std::size_t k_max = 200) const;
    std::string name() const;
};

struct FunctionalOptimum {
    double argmin = 0.0;
    double value = 0.0;
    std::size_t iterations = 0;
    double direct_sup = 0.0;  // direct_sup(argmin)
};

/// Ternary search for the minimizer on (1 + 1e-9, 64], polished by bisection
/// on the sign of the derivative. Throws if the sampled derivative changes
/// sign more than once on the bracket or the search does not converge.
FunctionalOptimum optimize_geometric_functional(const GeometricFunctional& functional, double tol = 1e-10);

/// All bound names accepted by bound_by_name.
std::vector<std::string> bound_names();
BoundReport bound_by_name(const std::string& name, std::size_t n, std::size_t m, std::optional<double> b);

}  // namespace contract_sched
