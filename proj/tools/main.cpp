#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fracineq::cli::run(args, fracineq::builtin_catalog(), std::cout, std::cerr);
}
