#include <iostream>
#include <string>
#include <vector>

#include "bfgame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bfgame::cli_main(args, std::cin, std::cout, std::cerr);
}
