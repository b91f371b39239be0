#include <iostream>
#include <string>
#include <vector>

#include "bicrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bicrit::cli::run(args, std::cout, std::cerr);
}
