#include <iostream>

#include "hdts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hdts::run_cli(args, std::cin, std::cout, std::cerr);
}
