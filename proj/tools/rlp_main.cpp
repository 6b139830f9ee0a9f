#include <iostream>
#include <string>
#include <vector>

#include "rlp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return rlp::cli::run(args, std::cout, std::cerr);
}
