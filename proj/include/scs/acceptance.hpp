#pragma once

// Built-in verification suite behind the `selftest` command and the
// acceptance test binary. Every check pins its tolerance in code; the
// formatted report is deterministic (no timings, fixed ordering) so two
// runs produce byte-identical output.

#include <string>
#include <vector>

namespace scs::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic; no timings in here
  double seconds = 0.0; // reported on stderr only
};

// Runs criteria 1..8 (the process-level determinism check is driven from
// the acceptance binary, which invokes the CLI twice). A non-empty filter
// keeps only criteria whose name contains it.
std::vector<CriterionResult> run_all(const std::string& filter = "");

std::string format_results(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace scs::acceptance
