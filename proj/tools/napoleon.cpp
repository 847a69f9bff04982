#include <iostream>

#include "napoleon/cli.hpp"

int main(int argc, char** argv) {
  return napoleon::cli::run(argc, argv, std::cout, std::cerr);
}
