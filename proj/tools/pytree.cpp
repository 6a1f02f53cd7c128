#include <iostream>

#include "pytree/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return pytree::cli::run(argc, argv, std::cout, std::cerr);
}
