#include <iostream>
#include <string>
#include <vector>

#include "kkdrop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kkdrop::run_cli(args, std::cout, std::cerr);
}
