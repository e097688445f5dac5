#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgps::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternalError = 1;
inline constexpr int kExitDetectionOnly = 2;  // protocol ran, no fix, attacks seen
inline constexpr int kExitNoFix = 3;          // no fix (solver or certification shortfall)
inline constexpr int kExitConfigError = 64;   // bad flags or malformed config files

inline constexpr std::uint64_t kDefaultSeed = 42;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // serialized report (JSON, table or CSV)
};

/// Parses argv-style arguments (without the program name) and runs the
/// subcommand. All output is returned, nothing is printed.
CommandResult run_command(const std::vector<std::string>& args);

/// Full CLI entry: runs the command, honours --output, prints to stdout.
int run_main(int argc, char** argv);

}  // namespace qgps::cli
