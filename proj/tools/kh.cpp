#include <iostream>
#include <string>
#include <vector>

#include "khow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return khow::run_cli(args, std::cout, std::cerr);
}
