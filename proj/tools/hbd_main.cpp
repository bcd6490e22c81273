#include <iostream>
#include <string>
#include <vector>

#include "hbd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hbd::cli::run(args, std::cout, std::cerr);
}
