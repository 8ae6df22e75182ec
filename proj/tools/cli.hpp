#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flatcyc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;

/// Parse and run one command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names of the golden checks run by verify-constructions, in order.
std::vector<std::string> construction_check_names();

}  // namespace flatcyc::cli
