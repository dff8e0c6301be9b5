#include "contract_sched/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace contract_sched {

bool approx_le(double a, double b, double rel_tol) noexcept {
    if (a <= b) return true;
    return a - b <= rel_tol * std::max(std::fabs(a), std::fabs(b));
}

bool approx_eq(double a, double b, double rel_tol) noexcept {
    if (a == b) return true;
    if (std::isinf(a) || std::isinf(b)) return false;
    return std::fabs(a - b) <= rel_tol * std::max(std::fabs(a), std::fabs(b));
}

Schedule::Schedule(std::size_t n_problems, std::size_t m_processors, std::vector<Contract> contracts)
    : n_(n_problems), m_(m_processors), contracts_(std::move(contracts)) {
    if (n_ == 0) throw DomainError("schedule needs at least one problem");
    if (m_ == 0) throw DomainError("schedule needs at least one processor");

    std::vector<double> load(m_, 0.0);
    start_.reserve(contracts_.size());
    finish_.reserve(contracts_.size());
    for (std::size_t i = 0; i < contracts_.size(); ++i) {
        const auto& c = contracts_[i];
        if (!(c.length > 0.0) || !std::isfinite(c.length))
            throw DomainError("contract " + std::to_string(i) + " has non-positive or non-finite length");
        if (c.problem >= n_)
            throw DomainError("contract " + std::to_string(i) + " has problem index out of range");
        if (c.processor >= m_)
            throw DomainError("contract " + std::to_string(i) + " has processor index out of range");
        start_.push_back(load[c.processor]);
        load[c.processor] += c.length;
        finish_.push_back(load[c.processor]);
    }
}

std::vector<std::size_t> Schedule::queue(std::size_t p) const {
    if (p >= m_) throw DomainError("processor index out of range");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < contracts_.size(); ++i)
        if (contracts_[i].processor == p) out.push_back(i);
    return out;
}

Snapshot::Snapshot(double t, bool just_before, std::vector<double> longest)
    : t_(t), just_before_(just_before), longest_(std::move(longest)), sorted_(longest_) {
    std::sort(sorted_.begin(), sorted_.end());
    complete_ = std::all_of(longest_.begin(), longest_.end(), [](double l) { return l > 0.0; });
}

double Snapshot::sorted_at(std::size_t i) const {
    if (i == 0 || i > sorted_.size()) throw std::out_of_range("snapshot rank out of range");
    return sorted_[i - 1];
}

std::vector<FinishedContract> simulate(const Schedule& schedule) {
    std::vector<FinishedContract> out;
    out.reserve(schedule.size());
    for (std::size_t i = 0; i < schedule.size(); ++i) out.push_back({i, schedule.finish_time(i)});
    return out;
}

namespace {

Snapshot take_snapshot(const Schedule& schedule, double t, bool just_before) {
    if (!(t > 0.0)) throw DomainError("interruption time must be positive");
    std::vector<double> longest(schedule.n_problems(), 0.0);
    const auto contracts = schedule.contracts();
    for (std::size_t i = 0; i < contracts.size(); ++i) {
        const double f = schedule.finish_time(i);
        const bool done = just_before ? (f < t && !approx_eq(f, t)) : approx_le(f, t);
        if (done) {
            auto& l = longest[contracts[i].problem];
            l = std::max(l, contracts[i].length);
        }
    }
    return Snapshot(t, just_before, std::move(longest));
}

}  // namespace

Snapshot snapshot(const Schedule& schedule, double t) { return take_snapshot(schedule, t, false); }

Snapshot snapshot_before(const Schedule& schedule, double t) { return take_snapshot(schedule, t, true); }

std::vector<double> critical_times(const Schedule& schedule) {
    std::vector<double> times(schedule.finish_times().begin(), schedule.finish_times().end());
    std::sort(times.begin(), times.end());
    std::vector<double> out;
    for (double t : times)
        if (out.empty() || !approx_eq(out.back(), t)) out.push_back(t);
    return out;
}

}  // namespace contract_sched
