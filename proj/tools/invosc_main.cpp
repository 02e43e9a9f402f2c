#include <iostream>

#include "invosc/cli.hpp"

int main(int argc, char* argv[]) {
  return invosc::cli::run_cli(argc, argv, std::cout, std::cerr);
}
