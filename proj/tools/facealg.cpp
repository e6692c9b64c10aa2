#include <iostream>

#include "facealg/cli.hpp"

int main(int argc, char** argv) {
  return facealg::cli::run(argc, argv, std::cout, std::cerr);
}
