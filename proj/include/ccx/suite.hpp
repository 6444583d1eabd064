#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccx {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The full verification battery: one entry per criterion, each printed as a
// pass/fail line on `log` as it completes. Exhaustive scans over the seeded
// corpus plus the named generator families. When golden_dir is nonempty the
// certificate outputs are also compared byte-for-byte against the stored
// golden files.
std::vector<CriterionResult> run_acceptance(std::ostream& log,
                                            const std::string& golden_dir = "");

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ccx
