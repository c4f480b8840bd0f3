#include <iostream>
#include <string>
#include <vector>

#include "sgraph/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return sgraph::cli::run(args, std::cout, std::cerr);
}
