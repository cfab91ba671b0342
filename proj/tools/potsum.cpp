#include <iostream>

#include "potsum/cli/cli.hpp"

int main(int argc, char** argv) {
  return potsum::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
