#include <iostream>

#include "khcube_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return khcube::cli::run(args, std::cout, std::cerr);
}
