#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace barriers::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  /// Violations, counterexamples, or a search that came back empty-handed.
  kFailed = 1,
  /// Bad flags or malformed input.
  kUsage = 2,
  /// An internal invariant failed; the message carries a BUG tag.
  kBug = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barriers::cli
