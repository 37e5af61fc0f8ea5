#pragma once

#include <iosfwd>

namespace cheeger::app {

/// Exit codes of the command-line tool.
enum ExitCode { kOk = 0, kUsage = 1, kInadmissible = 2, kIoError = 3 };

/// Runs the command line `argv` writing reports to `out` and diagnostics
/// to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cheeger::app
