#pragma once

#include <iosfwd>

namespace lommelcheck::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2, kIoError = 3 };

// Parses argv[1..] as a subcommand (eval, sweep, verify) and runs it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lommelcheck::cli
