#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infnet::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

// `args` excludes the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest decimal that round-trips, independent of the global locale.
std::string format_number(double value);

}  // namespace infnet::cli
