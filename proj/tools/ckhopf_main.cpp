#include <iostream>

#include "ckhopf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ckhopf::run_cli(args, std::cout, std::cerr);
}
