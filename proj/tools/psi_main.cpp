#include <iostream>

#include "psi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return psi::cli::run(args, std::cout, std::cerr);
}
