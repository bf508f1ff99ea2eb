#include <iostream>

#include "su2w/cli.hpp"

int main(int argc, char** argv) {
  return su2w::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
