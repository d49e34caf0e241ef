#include <iostream>

#include "fincat/cli.hpp"

int main(int argc, char** argv) {
  return fincat::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
