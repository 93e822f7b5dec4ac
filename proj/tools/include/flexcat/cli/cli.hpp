#pragma once

#include <ostream>
#include <span>
#include <string>

namespace flexcat::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFalse = 2;

/// Runs one subcommand. `args` excludes the program name, so args[0] is the
/// subcommand. Results go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace flexcat::cli
