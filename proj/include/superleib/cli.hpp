#pragma once

#include <string>
#include <vector>

namespace superleib::cli {

/// Exit codes: 0 pass, 1 checker failure, 2 usage or internal error.
struct CommandResult {
  int exit_code = 0;
  std::string status;  // pass | fail | error
  std::string output;  // stdout payload (also written to --out when given)
  std::string errors;  // stderr payload
};

/// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace superleib::cli
