#include <iostream>

#include "gsb/cli.hpp"

int main(int argc, char** argv) {
  return gsb::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
