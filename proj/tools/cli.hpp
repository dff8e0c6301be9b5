#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contract_sched::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contract_sched::cli
