#include <iostream>
#include <string>
#include <vector>

#include "simplap/cli.hpp"

int main(int argc, char** argv) {
  return simplap::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
