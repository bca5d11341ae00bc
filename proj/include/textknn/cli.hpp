#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace textknn::cli {

/// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 2;
inline constexpr int exit_usage = 3;

/// Runs the textknn command line (train / classify / sweep / synth) with
/// the given arguments, writing to the supplied streams. Returns the
/// process exit code instead of calling exit(), so tests can drive it
/// in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace textknn::cli
