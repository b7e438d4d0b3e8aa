#include <iostream>
#include <string>
#include <vector>

#include "neuralcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return neuralcode::run_cli(args, std::cin, std::cout, std::cerr);
}
