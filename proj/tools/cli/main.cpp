#include <iostream>
#include <string>
#include <vector>

#include "ising2q_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ising2q::cli::run(args, std::cout, std::cerr);
}
