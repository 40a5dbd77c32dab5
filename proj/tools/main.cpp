#include <iostream>
#include <string>
#include <vector>

#include "tgs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tgs::run_cli(args, std::cout, std::cerr);
}
