#include <iostream>
#include <string>
#include <vector>

#include "persemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return persemi::cli::run(args, std::cout, std::cerr);
}
