#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace contract_sched {

/// Figure dataset: one comment line of parameters, a header, numeric rows.
struct Table {
    std::string comment;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Worker count for sweeps: hardware concurrency, capped by the
/// CONTRACT_SCHED_THREADS environment variable when it is a positive integer.
std::size_t sweep_threads();

/// Evaluates fn(0..count-1) on up to `threads` workers. Results keep index order.
std::vector<std::vector<double>> parallel_rows(std::size_t count, const std::function<std::vector<double>(std::size_t)>& fn,
                                               std::size_t threads);

/// Figure dataset 1: performance ratio of the acceleration-optimal schedule against n/m.
Table figure1(std::size_t max_ratio = 64);
/// Figure dataset 2: the deficiency bound at beta over (m, rho).
Table figure2(std::size_t max_m = 64, std::size_t max_rho = 64);
/// Figure dataset 3: single-processor lower bound (n+1)/n and best exponential value.
Table figure3(std::size_t max_n = 20);
/// figure1/2/3 by number; throws DomainError otherwise.
Table figure_table(int figure);

/// "# comment", header, then rows with 12 significant digits.
std::string to_csv(const Table& table);
/// Parses to_csv output back into a table.
Table parse_csv(const std::string& text);

}  // namespace contract_sched
