#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slacqm::cli {

enum ExitCode : int { ok = 0, config_error = 1, numerical_error = 2, bench_failure = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Caps OpenMP and BLAS threads from SLACQM_THREADS if it holds a positive integer.
void apply_thread_limit_from_env();

}  // namespace slacqm::cli
