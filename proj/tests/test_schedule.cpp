#include <doctest.h>

#include <random>

#include "contract_sched/generators.hpp"
#include "contract_sched/schedule.hpp"
#include "contract_sched/schedule_io.hpp"
#include "oracles.hpp"

using namespace contract_sched;

namespace {

Schedule single_processor(std::size_t n, std::vector<std::pair<std::size_t, double>> contracts) {
    std::vector<Contract> cs;
    for (auto [p, len] : contracts) cs.push_back({p, 0, len});
    return Schedule(n, 1, std::move(cs));
}

}  // namespace

TEST_CASE("simulate: exponential b=2, n=3, m=2") {
    const auto s = exponential_schedule({3, 2, 2.0, 5});
    const auto finished = simulate(s);
    // queues {1,4,16}, {2,8}: x_3 = 8 finishes at 2 + 8
    CHECK(finished[3].finish == doctest::Approx(10.0));
    CHECK(finished[3].index == 3);
    CHECK(finished[0].finish == 1.0);
    CHECK(finished[2].finish == 5.0);
}

TEST_CASE("simulate: single contract and prefix sums") {
    CHECK(simulate(single_processor(1, {{0, 5.0}}))[0].finish == 5.0);

    const auto f = simulate(exponential_schedule({1, 1, 2.0, 3}));
    REQUIRE(f.size() == 3);
    CHECK(f[0].finish == 1.0);
    CHECK(f[1].finish == 3.0);
    CHECK(f[2].finish == 7.0);
}

TEST_CASE("schedule rejects invalid contracts") {
    CHECK_THROWS_AS(single_processor(1, {{0, 0.0}}), DomainError);
    CHECK_THROWS_AS(single_processor(1, {{0, -1.0}}), DomainError);
    CHECK_THROWS_AS(single_processor(1, {{0, std::numeric_limits<double>::infinity()}}), DomainError);
    CHECK_THROWS_AS(single_processor(2, {{2, 1.0}}), DomainError);
    CHECK_THROWS_AS(Schedule(1, 1, {{0, 1, 1.0}}), DomainError);
    CHECK_THROWS_AS(Schedule(0, 1, {}), DomainError);
    CHECK_THROWS_AS(Schedule(1, 0, {}), DomainError);
}

TEST_CASE("per-processor finish times strictly increase along each queue") {
    const auto s = exponential_schedule({3, 3, 1.3, 40});
    for (std::size_t p = 0; p < 3; ++p) {
        const auto q = s.queue(p);
        for (std::size_t i = 1; i < q.size(); ++i) CHECK(s.finish_time(q[i]) > s.finish_time(q[i - 1]));
    }
}

TEST_CASE("snapshot: n=2, m=1 doubling") {
    const auto s = exponential_schedule({2, 1, 2.0, 4});  // problems 0,1,0,1; finish 1,3,7,15

    const auto before7 = snapshot_before(s, 7.0);
    CHECK(before7.longest()[0] == 1.0);
    CHECK(before7.longest()[1] == 2.0);
    CHECK(before7.complete());
    CHECK(before7.just_before());

    const auto at15 = snapshot(s, 15.0);
    CHECK(at15.longest()[0] == 4.0);
    CHECK(at15.longest()[1] == 8.0);
    CHECK(at15.sorted_at(1) == 4.0);
    CHECK(at15.sorted_at(2) == 8.0);
    CHECK_THROWS_AS(at15.sorted_at(0), std::out_of_range);
    CHECK_THROWS_AS(at15.sorted_at(3), std::out_of_range);

    const auto early = snapshot(s, 0.5);
    CHECK_FALSE(early.complete());
    CHECK(early.longest()[0] == 0.0);
    CHECK(early.longest()[1] == 0.0);

    CHECK_THROWS_AS(snapshot(s, 0.0), DomainError);
}

TEST_CASE("critical times") {
    CHECK(critical_times(exponential_schedule({1, 1, 2.0, 3})) == std::vector<double>{1.0, 3.0, 7.0});
    CHECK(critical_times(Schedule(1, 1, {})).empty());
    CHECK(critical_times(exponential_schedule({3, 2, 2.0, 5})).size() == 5);

    const auto four = Schedule(3, 2, {{0, 0, 1.0}, {1, 1, 2.0}, {2, 0, 4.0}, {0, 1, 8.0}});
    CHECK(critical_times(four) == std::vector<double>{1.0, 2.0, 5.0, 10.0});
}

TEST_CASE("ties: every contract finishing at G is excluded at G^-") {
    const Schedule s(2, 2, {{0, 0, 3.0}, {1, 1, 3.0}, {0, 0, 4.0}, {1, 1, 4.0}});
    CHECK(critical_times(s) == std::vector<double>{3.0, 7.0});
    const auto snap = snapshot_before(s, 7.0);
    CHECK(snap.longest()[0] == 3.0);
    CHECK(snap.longest()[1] == 3.0);
    CHECK(snapshot(s, 7.0).sorted_at(1) == 4.0);
}

TEST_CASE("round-robin placement of exponential schedules") {
    const auto s = exponential_schedule({4, 3, 1.5, 30});
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].problem == i % 4);
        CHECK(s[i].processor == i % 3);
    }
}

TEST_CASE("snapshot properties on random schedules") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick_n(1, 5), pick_m(1, 3), pick_len(1, 25);
    std::uniform_real_distribution<double> length(0.1, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = pick_n(rng), m = pick_m(rng), count = pick_len(rng);
        std::vector<Contract> cs;
        std::vector<oracle::Job> jobs;
        for (std::size_t i = 0; i < count; ++i) {
            Contract c{rng() % n, rng() % m, length(rng)};
            cs.push_back(c);
            jobs.push_back({c.problem, c.processor, c.length});
        }
        const Schedule s(n, m, cs);
        const auto expected_finish = oracle::finish_times(jobs, m);
        for (std::size_t i = 0; i < count; ++i) CHECK(s.finish_time(i) == expected_finish[i]);

        const auto times = critical_times(s);
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < times.size(); ++i) min_gap = std::min(min_gap, times[i] - times[i - 1]);
        if (!times.empty()) min_gap = std::min(min_gap, times.front());

        std::vector<double> prev(n, 0.0);
        for (double t : times) {
            const auto before = snapshot_before(s, t);
            // G^- is the same as G - eps for any eps below the minimal gap
            const auto eps = oracle::longest(jobs, n, m, t - 0.5 * min_gap, false);
            const auto strict = oracle::longest(jobs, n, m, t, true);
            for (std::size_t p = 0; p < n; ++p) {
                CHECK(before.longest()[p] == eps[p]);
                CHECK(before.longest()[p] == strict[p]);
            }
            // monotone in t
            const auto at = snapshot(s, t);
            for (std::size_t p = 0; p < n; ++p) {
                CHECK(at.longest()[p] >= prev[p]);
                CHECK(at.longest()[p] >= before.longest()[p]);
                prev[p] = at.longest()[p];
            }
            CHECK(std::is_sorted(at.sorted().begin(), at.sorted().end()));
        }
    }
}

TEST_CASE("schedule JSON round trip is bit exact") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> length(1e-3, 1e3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Contract> cs;
        for (int i = 0; i < 20; ++i) cs.push_back({rng() % 3, rng() % 2, length(rng)});
        const Schedule s(3, 2, cs);
        const auto text = write_schedule(s);
        const auto back = read_schedule(text);
        CHECK(back == s);
        CHECK(write_schedule(back) == text);
    }
}

TEST_CASE("schedule JSON errors") {
    CHECK_THROWS_AS(read_schedule("not json"), DomainError);
    CHECK_THROWS_AS(read_schedule(R"({"n": 1})"), DomainError);
    CHECK_THROWS_AS(read_schedule(R"({"n": -1, "m": 1, "contracts": []})"), DomainError);
    CHECK_THROWS_AS(read_schedule(R"({"n": 1, "m": 1, "contracts": [{"problem": 0, "processor": 0, "length": 0}]})"),
                    DomainError);
    CHECK(read_schedule(R"({"n": 2, "m": 1, "contracts": [{"problem": 1, "processor": 0, "length": 2.5}]})")[0].length ==
          2.5);
}
