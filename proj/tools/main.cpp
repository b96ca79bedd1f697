#include <iostream>
#include <string>
#include <vector>

#include "bpair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bpair::cli::run(args, std::cout, std::cerr);
}
