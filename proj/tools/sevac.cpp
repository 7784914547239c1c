#include <iostream>
#include <string>
#include <vector>

#include "sevac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sevac::run_cli(args, std::cout, std::cerr);
}
