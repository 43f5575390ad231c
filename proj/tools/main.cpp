#include <iostream>

#include "selfshuffle/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return selfshuffle::cli_run(args, std::cout, std::cerr);
}
