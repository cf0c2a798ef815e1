#include <iostream>

#include "permred_cli/commands.hpp"

int main(int argc, char** argv) {
  return permred::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
