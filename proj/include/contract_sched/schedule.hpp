#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace contract_sched {

/// Relative tolerance used for every time/length comparison in the library.
inline constexpr double kRelTol = 1e-9;

/// Thrown when a schedule, instance or parameter violates its invariants.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One execution of a contract algorithm.
struct Contract {
    std::size_t problem = 0;
    std::size_t processor = 0;
    double length = 0.0;

    friend bool operator==(const Contract&, const Contract&) = default;
};

struct FinishedContract {
    std::size_t index = 0;  // position in the global contract list
    double finish = 0.0;
};

/// A finite prefix of a schedule of contracts on identical processors.
///
/// Contracts are kept in global execution order. Every processor runs the
/// contracts assigned to it back-to-back from time 0, so the finish time of
/// the j-th contract on a processor is the sum of the first j lengths there.
/// Finish times are computed once on construction; the object is immutable.
class Schedule {
public:
    Schedule(std::size_t n_problems, std::size_t m_processors, std::vector<Contract> contracts);

    std::size_t n_problems() const noexcept { return n_; }
    std::size_t m_processors() const noexcept { return m_; }
    std::size_t size() const noexcept { return contracts_.size(); }
    bool empty() const noexcept { return contracts_.empty(); }

    std::span<const Contract> contracts() const noexcept { return contracts_; }
    const Contract& operator[](std::size_t i) const { return contracts_.at(i); }

    /// Finish time of contract i (global index).
    double finish_time(std::size_t i) const { return finish_.at(i); }
    std::span<const double> finish_times() const noexcept { return finish_; }
    /// Start time of contract i, i.e. its finish time minus its length.
    double start_time(std::size_t i) const { return start_.at(i); }

    /// Global indices of the contracts on processor p, in execution order.
    std::vector<std::size_t> queue(std::size_t p) const;

    friend bool operator==(const Schedule& a, const Schedule& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.contracts_ == b.contracts_;
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<Contract> contracts_;
    std::vector<double> start_;
    std::vector<double> finish_;
};

/// Per-problem longest completed contracts at an interruption time.
///
/// `just_before` marks an evaluation at t^-: every contract finishing at t
/// (within kRelTol) is excluded, so the snapshot holds exactly what was
/// completed strictly before t.
class Snapshot {
public:
    Snapshot(double t, bool just_before, std::vector<double> longest);

    double time() const noexcept { return t_; }
    bool just_before() const noexcept { return just_before_; }
    std::span<const double> longest() const noexcept { return longest_; }
    std::span<const double> sorted() const noexcept { return sorted_; }
    /// i-th smallest entry, 1-based (i in [1, n]).
    double sorted_at(std::size_t i) const;
    /// False when some problem has no completed contract yet.
    bool complete() const noexcept { return complete_; }

private:
    double t_;
    bool just_before_;
    std::vector<double> longest_;
    std::vector<double> sorted_;
    bool complete_;
};

/// (contract index, finish time) for every contract, in global order.
std::vector<FinishedContract> simulate(const Schedule& schedule);

/// Snapshot including every contract finished by t.
Snapshot snapshot(const Schedule& schedule, double t);
/// Snapshot at t^-, excluding contracts that finish at t.
Snapshot snapshot_before(const Schedule& schedule, double t);

/// Sorted distinct contract finish times. Ties within kRelTol collapse to one
/// entry; evaluating at any of them via snapshot_before excludes all ties.
std::vector<double> critical_times(const Schedule& schedule);

/// a <= b up to relative tolerance.
bool approx_le(double a, double b, double rel_tol = kRelTol) noexcept;
/// |a - b| <= rel_tol * max(|a|, |b|), with exact equality for infinities.
bool approx_eq(double a, double b, double rel_tol = kRelTol) noexcept;

}  // namespace contract_sched
