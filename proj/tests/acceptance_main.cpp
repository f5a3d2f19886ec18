// Acceptance suite: runs every criterion on the full grid and prints one
// pass/fail line per criterion.
#include <cstdio>

#include "sarkisov/selfcheck.hpp"

int main() {
  sarkisov::CheckOptions opts;
  opts.full_grid = true;
  auto results = sarkisov::run_acceptance_checks(opts);
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s  criterion %s (%s)\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
