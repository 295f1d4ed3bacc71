#include <iostream>
#include <string>
#include <vector>

#include "qnary/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qnary::cli::run(args, std::cout, std::cerr);
}
