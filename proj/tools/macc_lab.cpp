#include <iostream>
#include <string>
#include <vector>

#include "macc/cli.hpp"

int main(int argc, char** argv) {
  return macc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
