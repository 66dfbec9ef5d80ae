#include <iostream>
#include <string>
#include <vector>

#include "qdyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qdyn::CliResult r = qdyn::run_cli(args);
  std::cout << r.out;
  if (!r.err.empty()) std::cerr << "qdyn: " << r.err << "\n";
  return r.exit_code;
}
