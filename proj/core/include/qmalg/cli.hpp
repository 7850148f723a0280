#pragma once

#include <string>
#include <vector>

namespace qmalg {

struct CliResult {
  int exit_code = 0;  ///< 0 holds, 1 property fails, 2 invalid input or usage
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name. Never throws.
CliResult cli_dispatch(const std::vector<std::string>& args);

}  // namespace qmalg
