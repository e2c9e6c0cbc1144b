#include <iostream>

#include "verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slzt::cli::run(args, std::cout, std::cerr);
}
