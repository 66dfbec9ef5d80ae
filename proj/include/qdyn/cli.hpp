#pragma once

#include <string>
#include <vector>

namespace qdyn {

struct CliResult {
  /// 0 success, 1 mathematical error, 2 usage or parse error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and returns the JSON
/// document it prints.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace qdyn
