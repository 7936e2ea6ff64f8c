#include <iostream>
#include <string>
#include <vector>

#include "casimir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return casimir::cli::cli_main(args, std::cout, std::cerr);
}
