#include <iostream>

#include "qcarrier_cli/cli.hpp"

int main(int argc, char** argv) {
  return qcarrier::cli::run_cli(argc, argv, std::cout, std::cerr);
}
