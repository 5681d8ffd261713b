#include <iostream>

#include "driver/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return minigolo::tools::run_cli(argc, argv, std::cout, std::cerr);
}
