#include <iostream>
#include <vector>

#include "gptri/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gptri::cli::run(args, std::cout, std::cerr);
}
