#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tough::cli {

/// Exit codes used across all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitViolation = 3;

/// Runs the full CLI (args excludes the program name) writing results to
/// `out` and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tough::cli
