#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dckron::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kNotReducible = 4,
};

/// Runs `dckron <command> ...` with `args` excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dckron::cli
