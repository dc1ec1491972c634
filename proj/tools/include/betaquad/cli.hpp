#pragma once

// Command-line front end: list, show, verify and export.

#include <iosfwd>
#include <string>
#include <vector>

namespace betaquad::cli {

/// Exit codes of run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name) and executes the subcommand.
/// Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace betaquad::cli
