#include <iostream>
#include <string>
#include <vector>

#include "stablerep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stablerep::run_cli(args, std::cout, std::cerr);
}
