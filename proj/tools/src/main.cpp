#include <iostream>
#include <string>
#include <vector>

#include "konig/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return konig::cli::run(args, std::cout, std::cerr);
}
