// Acceptance sweeps: exact cross-checks between the intersection tables, the
// toric oracle, the link catalog, and the binary-form laws. Shared by the
// `selfcheck` CLI subcommand and the acceptance test binary.
#pragma once

#include <string>
#include <vector>

namespace sarkisov {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure summary or counts
};

struct CheckOptions {
  bool full_grid = true;
};

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& opts);

}  // namespace sarkisov
