#pragma once

#include <cstddef>
#include <optional>

#include "contract_sched/schedule.hpp"

namespace contract_sched {

/// Round-robin schedule with contract i of length base^i, serving problem
/// i mod n on processor i mod m.
struct ExponentialSpec {
    std::size_t n = 1;
    std::size_t m = 1;
    double base = 2.0;
    std::size_t k_max = 0;  // 0 selects default_contract_count(n, m)
};

std::size_t default_contract_count(std::size_t n, std::size_t m) noexcept;

Schedule exponential_schedule(const ExponentialSpec& spec);

/// gamma = (n-1) mod m and rho with n-1 = rho*m + gamma.
std::size_t gamma_of(std::size_t n, std::size_t m);
std::size_t rho_of(std::size_t n, std::size_t m);

/// Base minimizing b^{n+m} / (b^{n+m-1} - b^gamma):
/// K^{1/(K-1)} with K = n + m - gamma = m(rho+1) + 1. Reduces to (n+1)^{1/n} when m = 1.
double deficiency_optimal_base(std::size_t n, std::size_t m);

/// ((m+n)/n)^{1/m}, the base of the acceleration-optimal cyclic schedule.
double acceleration_optimal_base(std::size_t n, std::size_t m);

/// Closed-form finish time of contract i of an exponential schedule:
/// (b^{i+m} - b^{i mod m}) / (b^m - 1).
double exponential_finish_time(double base, std::size_t m, std::size_t i);

/// If the schedule is round-robin with a constant ratio between consecutive
/// contract lengths (> 1), returns that ratio. Contract lengths may be scaled
/// by any positive constant.
std::optional<double> detect_exponential_base(const Schedule& schedule);

}  // namespace contract_sched
