#include <iostream>
#include <string>
#include <vector>

#include "tamilstem/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return tamilstem::cli::main(args, std::cin, std::cout, std::cerr);
}
