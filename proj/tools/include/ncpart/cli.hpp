#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncpart::cli {

/// Exit codes of the ncpart tool.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kInfeasible = 2;

/// Runs the tool on argv[1..] and returns the exit code. Normal output goes to
/// `out` unless a subcommand writes to --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncpart::cli
