#pragma once

#include <iosfwd>

namespace efdkit {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitFragment = 3, kExitProperty = 4 };

/// Runs the `efdkit` command line; results go to `out` as JSON (or text), diagnostics to `err`.
/// The default seed can be overridden with the EFDKIT_SEED environment variable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efdkit
