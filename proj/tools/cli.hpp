#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepcol::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kVerified = 0,      // property verified or refutation certified
  kWitnessFound = 1,  // a (monochromatic / prefixal / covering) witness was found
  kInconclusive = 2,  // budget exhausted or periodicity suspected
  kUsageError = 3,    // bad flags, bad word spec, unreadable table
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcol::cli
