#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "contract_sched/schedule.hpp"

namespace contract_sched {

/// Jobs of positive size to be placed on m identical processors.
class MakespanInstance {
public:
    MakespanInstance(std::vector<double> sizes, std::size_t m);

    std::span<const double> sizes() const noexcept { return sizes_; }
    std::size_t job_count() const noexcept { return sizes_.size(); }
    std::size_t m() const noexcept { return m_; }

    double total() const noexcept;
    double largest() const noexcept;
    /// max(largest job, total / m): no assignment does better.
    double lower_bound() const noexcept;

private:
    std::vector<double> sizes_;
    std::size_t m_;
};

struct Assignment {
    std::vector<std::size_t> processor_of;  // job index -> processor
    std::vector<double> loads;
    double makespan = 0.0;
    bool optimal = false;
};

/// The exact solver refused an instance above its job-count guard.
class InstanceTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

inline constexpr std::size_t kExactJobLimit = 24;

/// Graham's list scheduling: jobs taken in `order`, each placed on a least
/// loaded processor (lowest index on ties).
Assignment greedy_in_order(const MakespanInstance& instance, std::span<const std::size_t> order);

/// Makespan of greedy_in_order on sizes b^k, ..., b^{n+k-1} taken in
/// increasing order: b^k (b^{n+m-1} - b^{(n-1) mod m}) / (b^m - 1).
double greedy_geometric_makespan(double b, std::size_t n, std::size_t m, std::size_t k);

/// Longest processing time first.
Assignment lpt_makespan(const MakespanInstance& instance);

/// Branch and bound over assignments; proven optimal. Throws InstanceTooLarge
/// when the instance has more than `job_limit` jobs.
Assignment exact_makespan(const MakespanInstance& instance, std::size_t job_limit = kExactJobLimit);

Assignment assignment_from(const MakespanInstance& instance, std::vector<std::size_t> processor_of);

}  // namespace contract_sched
