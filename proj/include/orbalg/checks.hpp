#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbalg::checks {

struct Options {
  // Extended mode widens the sweeps beyond the standard scales; the
  // standard suite is what the acceptance criteria pin down.
  bool extended = false;
  std::uint64_t seed = 0xC0FFEE;
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // deterministic: safe to include in compared output
  double seconds = 0.0;  // wall time, reporting only
};

// Runs the nine acceptance criteria in order.  Each result's detail says
// what was computed; failures carry the first counterexample.
std::vector<CriterionResult> run_all(const Options& options);

}  // namespace orbalg::checks
