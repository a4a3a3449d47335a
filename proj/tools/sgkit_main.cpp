#include <iostream>

#include "sgkit/cli.hpp"

int main(int argc, char** argv) {
  return sgkit::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
