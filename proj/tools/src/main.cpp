#include <iostream>
#include <string>
#include <vector>

#include "oreqb_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oreqb::cli::run(args, std::cout, std::cerr);
}
