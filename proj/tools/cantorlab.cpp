#include <iostream>

#include "cantorlab/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cantorlab::cli::run(args, std::cout, std::cerr);
}
