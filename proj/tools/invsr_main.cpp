#include <iostream>
#include <string>
#include <vector>

#include "invsr/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return invsr::run_cli(args, std::cin, std::cout, std::cerr);
}
