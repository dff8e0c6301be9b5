#include <doctest.h>

#include <cmath>
#include <random>

#include "contract_sched/metrics.hpp"
#include "contract_sched/transforms.hpp"
#include "oracles.hpp"

using namespace contract_sched;

namespace {

Schedule single(std::size_t n, const std::vector<std::pair<std::size_t, double>>& contracts) {
    std::vector<Contract> cs;
    for (auto [p, len] : contracts) cs.push_back({p, 0, len});
    return Schedule(n, 1, std::move(cs));
}

std::vector<std::size_t> problems(const Schedule& s) {
    std::vector<std::size_t> out;
    for (const auto& c : s.contracts()) out.push_back(c.problem);
    return out;
}

// Deficiency on one processor straight from the definition: at every t^- the
// optimal offline schedule runs the longest completed contracts back to back.
// Only windows where every problem is served count; a prefix without any such
// window contributes nothing (0), since truncation removed all of them.
double definition_deficiency(const Schedule& s) {
    std::vector<oracle::Job> jobs;
    for (const auto& c : s.contracts()) jobs.push_back({c.problem, 0, c.length});
    const auto finish = oracle::finish_times(jobs, 1);
    double worst = -1.0;
    for (double t : finish) {
        const auto l = oracle::longest(jobs, s.n_problems(), 1, t, true);
        double sum = 0.0;
        bool served = true;
        for (double v : l) {
            served = served && v > 0.0;
            sum += v;
        }
        if (served) worst = std::max(worst, t / sum);
    }
    return std::max(worst, 0.0);
}

// Random single-processor schedule whose first n contracts cover every problem.
Schedule random_single(std::mt19937_64& rng, std::size_t n, std::size_t count) {
    std::uniform_real_distribution<double> length(0.2, 6.0);
    std::vector<Contract> cs;
    for (std::size_t i = 0; i < count; ++i) cs.push_back({i < n ? i : rng() % n, 0, length(rng)});
    std::shuffle(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(n), rng);
    return Schedule(n, 1, std::move(cs));
}

// Random normalized two-problem schedule: every contract goes to the least
// worked problem and is longer than that problem's previous contract, so runs
// of three or more appear whenever a new length stays below the other's.
Schedule random_normalized_pair(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> first(0.5, 2.0), growth(0.05, 2.5);
    double l[2] = {0.0, 0.0};
    std::vector<Contract> cs;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t p = l[1] < l[0] ? 1 : 0;
        const double len = l[p] == 0.0 ? first(rng) : l[p] * (1.0 + growth(rng));
        l[p] = len;
        cs.push_back({p, 0, len});
    }
    return Schedule(2, 1, std::move(cs));
}

}  // namespace

TEST_CASE("normalize example: least worked problem gets the next contract") {
    const auto in = single(2, {{0, 1.0}, {0, 2.0}, {1, 4.0}});
    const auto trace = normalize(in);
    CHECK(problems(trace.output) == std::vector<std::size_t>{0, 1, 0});
    REQUIRE(trace.steps.size() == 1);
    const auto& step = trace.steps[0];
    CHECK(step.kind == TransformStep::Kind::Swap);
    CHECK(step.index == 1);
    CHECK(step.time == 1.0);
    CHECK(*step.problem_from == 0);
    CHECK(*step.problem_to == 1);
    CHECK(step.condition_held);
    CHECK(step.deficiency_after <= step.deficiency_before + 1e-9);
    CHECK(deficiency_single_processor(trace.output).value == doctest::Approx(7.0 / 3.0));
    CHECK(is_normalized(trace.output));
}

TEST_CASE("normalize leaves a normalized schedule alone") {
    const auto rr = single(3, {{0, 1.0}, {1, 2.0}, {2, 3.0}, {0, 4.0}, {1, 5.0}, {2, 6.0}});
    CHECK(is_normalized(rr));
    const auto trace = normalize(rr);
    CHECK(trace.identity());
    CHECK(trace.output == rr);
}

TEST_CASE("dominated contracts are dropped first") {
    const auto in = single(2, {{0, 2.0}, {1, 3.0}, {0, 1.5}, {0, 4.0}});
    const auto trace = remove_dominated(in);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].kind == TransformStep::Kind::DominatedRemoval);
    CHECK(trace.steps[0].index == 2);
    CHECK(trace.output.size() == 3);
    CHECK(trace.steps[0].deficiency_after <= trace.steps[0].deficiency_before);
}

TEST_CASE("transforms reject unsupported shapes") {
    const Schedule two_proc(2, 2, {{0, 0, 1.0}, {1, 1, 1.0}});
    CHECK_THROWS_AS(normalize(two_proc), DomainError);
    CHECK_THROWS_AS(reduce_consecutive_pairs(two_proc), DomainError);
    CHECK_THROWS_AS(reduce_consecutive_pairs(single(3, {{0, 1.0}, {1, 2.0}, {2, 3.0}})), DomainError);
    // not normalized: problem 0 gets the second contract while 1 is unserved
    CHECK_THROWS_AS(reduce_consecutive_pairs(single(2, {{0, 1.0}, {0, 2.0}, {1, 4.0}})), DomainError);
}

TEST_CASE("reduce_consecutive_pairs on alternating problems is the identity") {
    const auto alt = single(2, {{0, 1.0}, {1, 2.0}, {0, 3.0}, {1, 4.0}, {0, 5.0}});
    const auto trace = reduce_consecutive_pairs(alt);
    CHECK(trace.identity());
    CHECK(trace.output == alt);
}

TEST_CASE("reduce_consecutive_pairs: a triple run either loses a contract or is certified") {
    // l_1 = 10 keeps problem 0 least worked for three contracts
    const auto triple = single(2, {{0, 1.0}, {1, 10.0}, {0, 2.0}, {0, 3.0}, {0, 4.0}, {0, 20.0}});
    REQUIRE(is_normalized(triple));
    REQUIRE(longest_run(triple) >= 3);
    const auto trace = reduce_consecutive_pairs(triple);
    REQUIRE_FALSE(trace.steps.empty());
    for (const auto& step : trace.steps) {
        const bool removed = step.kind == TransformStep::Kind::PairRemoval;
        const bool certified = step.kind == TransformStep::Kind::PairCertified && step.condition_held;
        CHECK((removed || certified));
        if (removed) CHECK(*step.q_after <= *step.q_before * (1 + 1e-9));
    }
    CHECK(longest_run(trace.output) <= 2);
    CHECK(deficiency_single_processor(trace.output).value <= deficiency_single_processor(triple).value + 1e-9);
}

TEST_CASE("single-processor deficiency agrees with its definition") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_single(rng, 1 + rng() % 4, 4 + rng() % 8);
        const double expected = definition_deficiency(s);
        const double got = deficiency_single_processor(s).value;
        if (expected == 0.0)
            CHECK(std::isinf(got));
        else
            CHECK(oracle::rel_close(got, expected, 1e-12));
    }
}

TEST_CASE("normalize never increases deficiency and is idempotent") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        const auto in = random_single(rng, 3, 8);
        const auto trace = normalize(in);
        CAPTURE(trial);
        CHECK(trace.output.n_problems() == 3);
        CHECK(trace.output.m_processors() == 1);
        CHECK(is_normalized(trace.output));
        CHECK(definition_deficiency(trace.output) <= definition_deficiency(in) + 1e-9);
        for (const auto& step : trace.steps)
            if (step.condition_held && std::isfinite(step.deficiency_after))
                CHECK(step.deficiency_after <= step.deficiency_before + 1e-9);
        CHECK(normalize(trace.output).identity());
    }
}

TEST_CASE("reduce_consecutive_pairs never increases deficiency") {
    std::mt19937_64 rng(777);
    int with_runs = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto in = random_normalized_pair(rng, 10);
        REQUIRE(is_normalized(in));
        if (longest_run(in) >= 3) ++with_runs;
        const auto trace = reduce_consecutive_pairs(in);
        CAPTURE(trial);
        CHECK(definition_deficiency(trace.output) <= definition_deficiency(in) + 1e-9);
        CHECK(longest_run(trace.output) <= 2);
        for (const auto& step : trace.steps) {
            if (step.kind == TransformStep::Kind::PairRemoval && std::isfinite(step.deficiency_after))
                CHECK(step.deficiency_after <= step.deficiency_before + 1e-9);
            else
                CHECK(step.condition_held);
        }
    }
    CHECK(with_runs > 50);
}
