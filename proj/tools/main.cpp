#include <iostream>
#include <string>
#include <vector>

#include "shiftbetti/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return shiftbetti::run(args, std::cout, std::cerr);
}
