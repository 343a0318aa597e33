#include <iostream>
#include <string>
#include <vector>

#include "evg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return evg::run_cli(args, std::cout, std::cerr);
}
