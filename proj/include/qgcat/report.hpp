#pragma once

#include <string>

namespace qgcat {

/// Pass/fail count for one family of exact checks.
struct SuiteReport {
  std::string family;
  long instances = 0;
  long violations = 0;
  std::string first_counterexample;
  bool ok() const { return violations == 0; }
};

}  // namespace qgcat
