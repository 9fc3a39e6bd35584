#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad arguments, unreadable or malformed input
  kTruncated = 2,   // completion stopped at a limit
  kInfinite = 3,    // count on an infinite language
  kMismatch = 4,    // verification or oracle disagreement
};

// Runs one command; `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsb::cli
