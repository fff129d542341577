#include <iostream>

#include "polyroots/cli.hpp"

int main(int argc, char** argv) {
  return polyroots::cli::main(argc, argv, std::cout, std::cerr);
}
