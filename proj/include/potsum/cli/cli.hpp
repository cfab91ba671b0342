#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace potsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv-style arguments (args[0] is the program name), runs the
/// subcommand and writes the report. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace potsum::cli
