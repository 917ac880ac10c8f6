#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crossn::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDimension = 3,
  kInvalidMetric = 4,
  kNumeric = 5,
};

/// Runs one command line (without the program name). The result document
/// goes to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossn::cli
