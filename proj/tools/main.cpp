#include <iostream>

#include "crinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crinv::run_cli(args, std::cout, std::cerr);
}
