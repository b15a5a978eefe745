#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdsgrs/selftest.hpp"

namespace mdsgrs::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHypothesis = 2,
  kVerification = 3,
  kNotSelfDual = 4,
  kMdsFailed = 5,
  kTooLarge = 6,
  kSelftestFailed = 7,
};

/// Test seams.
struct Hooks {
  FieldProvider selftest_fields;
};

/// Runs the command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace mdsgrs::cli
