#include <iostream>

#include "catindex/cli.hpp"

int main(int argc, char** argv) {
  return catindex::cli::run(argc, argv, std::cout, std::cerr);
}
