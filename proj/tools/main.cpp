#include <iostream>
#include <string>
#include <vector>

#include "lucky13/cli.hpp"

int main(int argc, char** argv) {
  return lucky13::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
