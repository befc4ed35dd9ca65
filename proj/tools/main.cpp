#include <iostream>

#include "betashift/cli.hpp"

int main(int argc, char** argv) {
  return betashift::cli_run(argc, argv, std::cout, std::cerr);
}
