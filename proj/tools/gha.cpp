#include <iostream>

#include "gha/cli.hpp"

int main(int argc, char** argv) {
  return gha::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
