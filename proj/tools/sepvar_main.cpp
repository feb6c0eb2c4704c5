#include <iostream>

#include "sepvar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sepvar::run_cli(args, std::cout, std::cerr);
}
