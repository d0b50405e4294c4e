#include <iostream>

#include "hgap/cli.hpp"

int main(int argc, char** argv) {
  return hgap::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
