#include <iostream>

#include "hconv/cli.hpp"

int main(int argc, char** argv) {
  return hconv::cli::run_main(argc, argv, std::cout, std::cerr);
}
