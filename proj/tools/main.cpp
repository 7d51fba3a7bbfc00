#include <iostream>
#include <string>
#include <vector>

#include "fisherq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fisherq::cli::run(args, std::cout, std::cerr);
}
