#include <iostream>
#include <string>
#include <vector>

#include "interlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return interlab::cli::run(args, std::cout, std::cerr);
}
