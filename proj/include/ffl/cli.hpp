#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffl::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_verification = 2;
inline constexpr int exit_usage = 64;

/// Runs one command line (without the program name). Output goes to `out`
/// (or to --out) only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ffl::cli
