#include <iostream>

#include "shiftmon/cli.hpp"

int main(int argc, char** argv) {
  return shiftmon::cli::run(argc, argv, std::cout, std::cerr);
}
