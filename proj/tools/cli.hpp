#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace troptp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitNotTp = 4;

/// Runs one command. `args` excludes the program name. An input path of "-"
/// reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace troptp::cli
