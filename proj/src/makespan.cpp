#include "contract_sched/makespan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace contract_sched {

MakespanInstance::MakespanInstance(std::vector<double> sizes, std::size_t m) : sizes_(std::move(sizes)), m_(m) {
    if (m_ == 0) throw DomainError("makespan instance needs at least one processor");
    for (double s : sizes_)
        if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("job sizes must be positive and finite");
}

double MakespanInstance::total() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), 0.0); }

double MakespanInstance::largest() const noexcept {
    return sizes_.empty() ? 0.0 : *std::max_element(sizes_.begin(), sizes_.end());
}

double MakespanInstance::lower_bound() const noexcept {
    return std::max(largest(), total() / static_cast<double>(m_));
}

Assignment assignment_from(const MakespanInstance& instance, std::vector<std::size_t> processor_of) {
    if (processor_of.size() != instance.job_count()) throw DomainError("assignment does not cover every job");
    Assignment a;
    a.loads.assign(instance.m(), 0.0);
    for (std::size_t j = 0; j < processor_of.size(); ++j) {
        if (processor_of[j] >= instance.m()) throw DomainError("assignment uses a processor out of range");
        a.loads[processor_of[j]] += instance.sizes()[j];
    }
    a.processor_of = std::move(processor_of);
    a.makespan = *std::max_element(a.loads.begin(), a.loads.end());
    return a;
}

Assignment greedy_in_order(const MakespanInstance& instance, std::span<const std::size_t> order) {
    const std::size_t jobs = instance.job_count();
    if (order.size() != jobs) throw DomainError("order must be a permutation of the jobs");
    std::vector<bool> seen(jobs, false);
    for (auto j : order) {
        if (j >= jobs || seen[j]) throw DomainError("order must be a permutation of the jobs");
        seen[j] = true;
    }

    std::vector<double> load(instance.m(), 0.0);
    std::vector<std::size_t> processor_of(jobs, 0);
    for (auto j : order) {
        const auto target = static_cast<std::size_t>(std::min_element(load.begin(), load.end()) - load.begin());
        processor_of[j] = target;
        load[target] += instance.sizes()[j];
    }
    return assignment_from(instance, std::move(processor_of));
}

double greedy_geometric_makespan(double b, std::size_t n, std::size_t m, std::size_t k) {
    if (!(b > 1.0)) throw DomainError("geometric makespan needs b > 1");
    if (n == 0 || m == 0) throw DomainError("n and m must be positive");
    const auto p = [b](std::size_t e) { return std::pow(b, static_cast<double>(e)); };
    return p(k) * (p(n + m - 1) - p((n - 1) % m)) / (p(m) - 1.0);
}

Assignment lpt_makespan(const MakespanInstance& instance) {
    std::vector<std::size_t> order(instance.job_count());
    std::iota(order.begin(), order.end(), 0);
    const auto sizes = instance.sizes();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
    auto result = greedy_in_order(instance, order);
    result.optimal = approx_eq(result.makespan, instance.lower_bound());
    return result;
}

namespace {

// Depth-first search over jobs sorted by decreasing size. Processors holding
// equal loads are interchangeable, so only the first of them is tried.
class BranchAndBound {
public:
    BranchAndBound(std::span<const double> sizes, std::size_t m, double incumbent, double floor)
        : sizes_(sizes), load_(m, 0.0), current_(sizes.size(), 0), best_(incumbent), floor_(floor) {
        remaining_.assign(sizes.size() + 1, 0.0);
        for (std::size_t i = sizes.size(); i-- > 0;) remaining_[i] = remaining_[i + 1] + sizes[i];
    }

    bool improved() const noexcept { return found_; }
    double best() const noexcept { return best_; }
    const std::vector<std::size_t>& best_assignment() const noexcept { return best_assignment_; }

    void run() { search(0, 0.0); }

private:
    bool done() const noexcept { return best_ <= floor_; }

    void search(std::size_t depth, double current_max) {
        if (done()) return;
        if (depth == sizes_.size()) {
            if (current_max < best_) {
                best_ = current_max;
                best_assignment_ = current_;
                found_ = true;
            }
            return;
        }
        double capacity = 0.0;
        for (double l : load_) capacity += std::max(0.0, best_ - l);
        if (capacity <= remaining_[depth]) return;

        const double size = sizes_[depth];
        for (std::size_t p = 0; p < load_.size(); ++p) {
            if (load_[p] + size >= best_) continue;
            bool duplicate = false;
            for (std::size_t q = 0; q < p && !duplicate; ++q) duplicate = load_[q] == load_[p];
            if (duplicate) continue;

            load_[p] += size;
            current_[depth] = p;
            search(depth + 1, std::max(current_max, load_[p]));
            load_[p] -= size;
            if (done()) return;
        }
    }

    std::span<const double> sizes_;
    std::vector<double> load_;
    std::vector<double> remaining_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_assignment_;
    double best_;
    double floor_;
    bool found_ = false;
};

}  // namespace

Assignment exact_makespan(const MakespanInstance& instance, std::size_t job_limit) {
    const std::size_t jobs = instance.job_count();
    if (jobs > job_limit)
        throw InstanceTooLarge("exact makespan limited to " + std::to_string(job_limit) + " jobs, got " +
                               std::to_string(jobs));

    auto incumbent = lpt_makespan(instance);
    incumbent.optimal = true;
    if (jobs <= instance.m() || instance.m() == 1 || incumbent.makespan <= instance.lower_bound()) return incumbent;

    std::vector<std::size_t> order(jobs);
    std::iota(order.begin(), order.end(), 0);
    const auto sizes = instance.sizes();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
    std::vector<double> sorted(jobs);
    for (std::size_t i = 0; i < jobs; ++i) sorted[i] = sizes[order[i]];

    BranchAndBound bb(sorted, instance.m(), incumbent.makespan, instance.lower_bound());
    bb.run();
    if (!bb.improved()) return incumbent;

    std::vector<std::size_t> processor_of(jobs);
    for (std::size_t i = 0; i < jobs; ++i) processor_of[order[i]] = bb.best_assignment()[i];
    auto result = assignment_from(instance, std::move(processor_of));
    result.optimal = true;
    return result;
}

}  // namespace contract_sched
