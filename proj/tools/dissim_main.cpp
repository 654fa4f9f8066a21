#include <iostream>
#include <string>
#include <vector>

#include "dissim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dissim::run_cli(args, std::cin, std::cout, std::cerr);
}
