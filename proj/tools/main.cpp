#include <iostream>
#include <string>
#include <vector>

#include "textknn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return textknn::cli::run_cli(args, std::cout, std::cerr);
}
