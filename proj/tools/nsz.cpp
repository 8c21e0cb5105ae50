#include <iostream>
#include <string>
#include <vector>

#include "nsz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nsz::run_cli(args, std::cout, std::cerr);
}
