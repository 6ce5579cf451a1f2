#include <iostream>

#include "gtb/cli.hpp"

int main(int argc, char** argv) {
  return gtb::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
