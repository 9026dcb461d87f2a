#include <iostream>
#include <string>
#include <vector>

#include "affsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return affsemi::run(args, std::cout, std::cerr);
}
