#include <iostream>

#include "steiner/cli.hpp"

int main(int argc, char** argv) {
  return steiner::run_cli(argc, argv, std::cout, std::cerr);
}
