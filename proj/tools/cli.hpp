#pragma once

#include <iosfwd>

namespace zgring::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kBound = 3 };

/// Runs one command line; data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zgring::cli
