#include <iostream>
#include <string>
#include <vector>

#include "factorcrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return factorcrit::cli::run(args, std::cin, std::cout, std::cerr);
}
