#include <iostream>
#include <string>
#include <vector>

#include "fermat_mld/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fermat_mld::cli::run(args, std::cout, std::cerr);
}
