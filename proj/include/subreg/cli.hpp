#pragma once

#include <string>
#include <vector>

namespace subreg {

struct CommandResult {
  int exit_code = 0;       // 0 ok, 1 check failed, 2 usage or I/O error
  std::string output;      // goes to stdout
};

// Dispatches one CLI invocation; `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace subreg
