#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapsum::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kSizeCap = 3,
  kInternal = 4,
};

/// Entry point shared by main() and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounded to 9 decimals, trailing zeros stripped, at least one decimal kept.
std::string format_number(double x);

}  // namespace lapsum::cli
