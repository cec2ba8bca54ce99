#include <iostream>

#include "critlab/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return critlab::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
