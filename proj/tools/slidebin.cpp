#include <iostream>

#include "slidebin/cli.hpp"

int main(int argc, char** argv) {
  return slidebin::cli::main(argc, argv, std::cout, std::cerr);
}
