#pragma once

#include <ostream>

namespace hcube::cli {

/// Exit codes of the hcube tool.
enum Exit : int {
  kOk = 0,
  kNegative = 1,    // check: symmetric; oracle: an asymmetric matrix exists; cube verify: not distinguishing
  kUsage = 2,       // bad arguments or unreadable input
  kDomain = 3,      // infeasible or out-of-range request
  kBudget = 4,      // a guard or search budget was hit
  kInternal = 5,
};

/// Runs one command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcube::cli
