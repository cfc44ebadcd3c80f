#include <iostream>

#include "rootcluster/cli.hpp"

int main(int argc, char** argv) {
  return rootcluster::cli::run(argc, argv, std::cout, std::cerr);
}
