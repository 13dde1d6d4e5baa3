#include <iostream>

#include "jkres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return jkres::cli::run(args, std::cout, std::cerr);
}
