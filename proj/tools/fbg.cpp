#include <iostream>
#include <string>
#include <vector>

#include "fbg/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fbg::run_cli(args, std::cout, std::cerr);
}
