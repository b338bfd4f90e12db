#include <iostream>
#include <string>
#include <vector>

#include "ringmat/cli.hpp"

int main(int argc, char** argv) {
  return ringmat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
