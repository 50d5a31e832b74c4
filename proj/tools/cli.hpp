#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normforge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFound = 1;  // violation or counterexample
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normforge::cli
