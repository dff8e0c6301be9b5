#include <doctest.h>

#include <numeric>
#include <random>

#include "contract_sched/makespan.hpp"
#include "oracles.hpp"

using namespace contract_sched;

namespace {

std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<double> geometric(double b, std::size_t n, std::size_t k) {
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::pow(b, static_cast<double>(k + i)));
    return v;
}

}  // namespace

TEST_CASE("greedy_in_order examples") {
    const MakespanInstance inst({1, 2, 4}, 2);
    const auto g = greedy_in_order(inst, identity(3));
    CHECK(g.loads == std::vector<double>{5, 2});
    CHECK(g.makespan == 5);
    CHECK(greedy_geometric_makespan(2.0, 3, 2, 0) == doctest::Approx(5.0));

    for (std::size_t m = 1; m <= 4; ++m) CHECK(greedy_in_order(MakespanInstance({7}, m), identity(1)).makespan == 7);
}

TEST_CASE("greedy_in_order rejects non-permutations") {
    const MakespanInstance inst({1, 2, 4}, 2);
    const std::vector<std::size_t> dup{0, 0, 1}, short_order{0, 1}, out{0, 1, 3};
    CHECK_THROWS_AS(greedy_in_order(inst, dup), DomainError);
    CHECK_THROWS_AS(greedy_in_order(inst, short_order), DomainError);
    CHECK_THROWS_AS(greedy_in_order(inst, out), DomainError);
}

TEST_CASE("geometric sizes in increasing order land on processor i mod m") {
    for (double b : {1.1, 1.5, 2.0, 3.0})
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t m = 1; m <= 4; ++m) {
                const MakespanInstance inst(geometric(b, n, 2), m);
                const auto g = greedy_in_order(inst, identity(n));
                for (std::size_t i = 0; i < n; ++i) CHECK(g.processor_of[i] == i % m);
            }
}

TEST_CASE("greedy_geometric_makespan closed form") {
    CHECK(greedy_geometric_makespan(2.0, 3, 2, 0) == doctest::Approx(5.0));
    CHECK(greedy_geometric_makespan(2.0, 1, 1, 0) == doctest::Approx(1.0));
    CHECK(greedy_geometric_makespan(2.0, 4, 1, 1) == doctest::Approx(30.0));
    CHECK_THROWS_AS(greedy_geometric_makespan(1.0, 2, 1, 0), DomainError);

    for (double b : {1.1, 1.5, 2.0, 3.0})
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t m = 1; m <= 4; ++m)
                for (std::size_t k = 0; k <= 3; ++k) {
                    const MakespanInstance inst(geometric(b, n, k), m);
                    CHECK(greedy_in_order(inst, identity(n)).makespan ==
                          doctest::Approx(greedy_geometric_makespan(b, n, m, k)).epsilon(1e-9));
                }
}

TEST_CASE("exact_makespan examples") {
    CHECK(exact_makespan(MakespanInstance({1, 2, 4}, 2)).makespan == 4);
    CHECK(exact_makespan(MakespanInstance({1, 2, 4, 8}, 2)).makespan == 8);
    CHECK(exact_makespan(MakespanInstance({3, 3, 2, 2, 2}, 2)).makespan == 6);
    CHECK(exact_makespan(MakespanInstance({1.5, 2.5, 4}, 1)).makespan == 8);
    CHECK(exact_makespan(MakespanInstance({}, 3)).makespan == 0);

    const auto a = exact_makespan(MakespanInstance({5, 4, 3, 3, 3}, 2));
    CHECK(a.optimal);
    CHECK(a.makespan == 9);
    double sum = 0;
    for (double l : a.loads) sum += l;
    CHECK(sum == 18);
}

TEST_CASE("exact_makespan guard") {
    const MakespanInstance big(std::vector<double>(25, 1.0), 3);
    CHECK_THROWS_AS(exact_makespan(big), InstanceTooLarge);
    CHECK(exact_makespan(big, 30).makespan == 9);
    CHECK(lpt_makespan(big).makespan == 9);
}

TEST_CASE("lpt_makespan examples") {
    CHECK(lpt_makespan(MakespanInstance({1, 2, 4}, 2)).makespan == 4);
    CHECK(lpt_makespan(MakespanInstance({1, 2, 4}, 5)).makespan == 4);
    CHECK(lpt_makespan(MakespanInstance({3, 9, 2}, 3)).makespan == 9);
    // 3,3 then 2,2 then the last 2 goes on a load of 5
    CHECK(lpt_makespan(MakespanInstance({3, 3, 2, 2, 2}, 2)).makespan == 7);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(MakespanInstance({1, 0}, 2), DomainError);
    CHECK_THROWS_AS(MakespanInstance({1, -2}, 2), DomainError);
    CHECK_THROWS_AS(MakespanInstance({1}, 0), DomainError);
}

TEST_CASE("exact_makespan agrees with enumeration on random instances") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> pick_n(1, 8), pick_m(1, 3);
    std::uniform_real_distribution<double> size(0.1, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = pick_n(rng), m = pick_m(rng);
        std::vector<double> sizes(n);
        for (auto& s : sizes) s = size(rng);
        // integer-valued sizes exercise load ties
        if (trial % 3 == 0)
            for (auto& s : sizes) s = std::round(s);
        for (auto& s : sizes) s = std::max(s, 1.0);
        const MakespanInstance inst(sizes, m);
        const auto exact = exact_makespan(inst);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(oracle::rel_close(exact.makespan, oracle::enumerate_makespan(sizes, m), 1e-9));
        CHECK(exact.makespan >= inst.lower_bound() * (1 - 1e-12));
        if (m >= n) CHECK(exact.makespan == inst.largest());

        // Graham sandwich
        const auto greedy = greedy_in_order(inst, identity(n));
        const double md = static_cast<double>(m);
        CHECK(exact.makespan <= greedy.makespan * (1 + 1e-12));
        CHECK(greedy.makespan <= (2.0 - 1.0 / md) * exact.makespan * (1 + 1e-12));

        // the assignment is consistent with its loads
        const auto rebuilt = assignment_from(inst, exact.processor_of);
        CHECK(rebuilt.makespan == doctest::Approx(exact.makespan));
    }
}

TEST_CASE("kappa lower bound on geometric instances") {
    for (double b : {1.1, 1.5, 2.0, 3.0})
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t m = 1; m <= 4; ++m)
                for (std::size_t k = 0; k <= 3; ++k) {
                    const MakespanInstance inst(geometric(b, n, k), m);
                    const double bm = std::pow(b, static_cast<double>(m));
                    const double kappa = std::max(1.0 / (2.0 - 1.0 / static_cast<double>(m)), (bm - 1.0) / bm);
                    CHECK(exact_makespan(inst).makespan >= kappa * greedy_geometric_makespan(b, n, m, k) * (1 - 1e-9));
                }
}
