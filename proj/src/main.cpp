#include <iostream>

#include "frobgraph/cli.hpp"

int main(int argc, char** argv) {
  return frobgraph::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
