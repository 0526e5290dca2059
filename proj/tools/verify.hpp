#pragma once

#include <string>
#include <vector>

namespace salpeter::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;   ///< worst deviation (or value) seen
  double tolerance = 0.0;  ///< threshold it was held to
  std::string detail;
};

/// Cross-checks every computed quantity against its independent route.
std::vector<CheckResult> run_verification(double tol);

}  // namespace salpeter::cli
