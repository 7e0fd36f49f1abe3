#pragma once

#include <ostream>

namespace supergroup::tools {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kTruncation = 3 };

/// Parses argv, runs one command, writes the JSON report to stdout or --json-out and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace supergroup::tools
