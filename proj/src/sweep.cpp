#include "contract_sched/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "contract_sched/bounds.hpp"
#include "contract_sched/generators.hpp"
#include "contract_sched/schedule.hpp"

namespace contract_sched {

std::size_t sweep_threads() {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CONTRACT_SCHED_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) threads = std::min(threads, static_cast<std::size_t>(cap));
    }
    return threads;
}

std::vector<std::vector<double>> parallel_rows(std::size_t count, const std::function<std::vector<double>(std::size_t)>& fn,
                                               std::size_t threads) {
    std::vector<std::vector<double>> rows(count);
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) rows[i] = fn(i);
        });
    pool.clear();
    return rows;
}

Table figure1(std::size_t max_ratio) {
    Table t;
    t.comment = fmt::format("figure=1 m=1 n=1..{} value=performance ratio of the acceleration-optimal schedule", max_ratio);
    t.header = {"n_over_m", "n", "m", "perf"};
    t.rows = parallel_rows(
        max_ratio,
        [](std::size_t i) {
            const std::size_t n = i + 1;
            return std::vector<double>{static_cast<double>(n), static_cast<double>(n), 1.0,
                                       performance_ratio_closed_form(n, 1).value};
        },
        sweep_threads());
    return t;
}

Table figure2(std::size_t max_m, std::size_t max_rho) {
    Table t;
    t.comment = fmt::format("figure=2 m=1..{} rho=1..{} value=deficiency bound at beta", max_m, max_rho);
    t.header = {"m", "rho", "beta", "deficiency_bound"};
    t.rows = parallel_rows(
        max_m * max_rho,
        [max_rho](std::size_t i) {
            const std::size_t m = i / max_rho + 1, rho = i % max_rho + 1;
            const std::size_t n = rho * m + 1;  // smallest n with this (m, rho)
            return std::vector<double>{static_cast<double>(m), static_cast<double>(rho), deficiency_optimal_base(n, m),
                                       deficiency_bound_surface(m, rho)};
        },
        sweep_threads());
    return t;
}

Table figure3(std::size_t max_n) {
    Table t;
    t.comment = fmt::format("figure=3 m=1 n=1..{} lower=(n+1)/n exp=(n+1)^((n+1)/n)/n", max_n);
    t.header = {"n", "lower", "exp"};
    t.rows = parallel_rows(
        max_n,
        [](std::size_t i) {
            const std::size_t n = i + 1;
            return std::vector<double>{static_cast<double>(n), deficiency_lower_bound_general(n).value,
                                       best_exponential_deficiency_single_processor(n).value};
        },
        sweep_threads());
    return t;
}

Table figure_table(int figure) {
    switch (figure) {
        case 1: return figure1();
        case 2: return figure2();
        case 3: return figure3();
    }
    throw DomainError(fmt::format("unknown figure {} (expected 1, 2 or 3)", figure));
}

std::string to_csv(const Table& table) {
    std::string out = "# " + table.comment + "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) out += (i ? "," : "") + table.header[i];
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += fmt::format("{}{:.12g}", i ? "," : "", row[i]);
        out += "\n";
    }
    return out;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    const auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        return cells;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            t.comment = line.substr(2);
        } else if (t.header.empty()) {
            t.header = split(line);
        } else {
            std::vector<double> row;
            for (const auto& cell : split(line)) {
                try {
                    row.push_back(std::stod(cell));
                } catch (const std::exception&) {
                    throw DomainError("bad CSV cell: " + cell);
                }
            }
            if (row.size() != t.header.size()) throw DomainError("CSV row width differs from header");
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace contract_sched
