#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slacqm {

struct BenchCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct BenchOutcome {
  std::vector<BenchCheck> checks;
  double seconds = 0.0;
  bool all_passed() const noexcept;
};

/// Runs the built-in problems that have published or analytic reference
/// spectra and checks them against fixed tolerances. One line per check is
/// written to `log` as it finishes.
BenchOutcome run_reference_bench(std::ostream& log);

}  // namespace slacqm
