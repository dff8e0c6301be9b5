#include "contract_sched/generators.hpp"

#include <cmath>

namespace contract_sched {

std::size_t default_contract_count(std::size_t n, std::size_t m) noexcept { return 8 * (n + m); }

Schedule exponential_schedule(const ExponentialSpec& spec) {
    if (spec.n == 0 || spec.m == 0) throw DomainError("exponential schedule needs n, m >= 1");
    if (!(spec.base > 1.0) || !std::isfinite(spec.base))
        throw DomainError("exponential schedule needs base > 1 (deficiency diverges otherwise)");
    const std::size_t count = spec.k_max == 0 ? default_contract_count(spec.n, spec.m) : spec.k_max;
    if (count < spec.n + spec.m) throw DomainError("k_max must be at least n + m");

    std::vector<Contract> contracts;
    contracts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double length = std::pow(spec.base, static_cast<double>(i));
        if (!std::isfinite(length)) throw DomainError("contract lengths overflow; reduce k_max or base");
        contracts.push_back({i % spec.n, i % spec.m, length});
    }
    return Schedule(spec.n, spec.m, std::move(contracts));
}

std::size_t gamma_of(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DomainError("n and m must be positive");
    return (n - 1) % m;
}

std::size_t rho_of(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DomainError("n and m must be positive");
    return (n - 1) / m;
}

double deficiency_optimal_base(std::size_t n, std::size_t m) {
    const double k = static_cast<double>(n + m - gamma_of(n, m));
    return std::exp(std::log(k) / (k - 1.0));
}

double acceleration_optimal_base(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DomainError("n and m must be positive");
    const double ratio = static_cast<double>(m + n) / static_cast<double>(n);
    return std::exp(std::log(ratio) / static_cast<double>(m));
}

double exponential_finish_time(double base, std::size_t m, std::size_t i) {
    if (!(base > 1.0)) throw DomainError("base must exceed 1");
    const double bm = std::pow(base, static_cast<double>(m));
    return (std::pow(base, static_cast<double>(i + m)) - std::pow(base, static_cast<double>(i % m))) / (bm - 1.0);
}

std::optional<double> detect_exponential_base(const Schedule& schedule) {
    const auto contracts = schedule.contracts();
    if (contracts.size() < 2) return std::nullopt;
    const std::size_t n = schedule.n_problems();
    const std::size_t m = schedule.m_processors();
    for (std::size_t i = 0; i < contracts.size(); ++i)
        if (contracts[i].problem != i % n || contracts[i].processor != i % m) return std::nullopt;

    const double ratio = contracts[1].length / contracts[0].length;
    if (!(ratio > 1.0)) return std::nullopt;
    for (std::size_t i = 1; i < contracts.size(); ++i)
        if (!approx_eq(contracts[i].length / contracts[i - 1].length, ratio)) return std::nullopt;
    return ratio;
}

}  // namespace contract_sched
