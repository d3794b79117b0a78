#include <iostream>
#include <string>
#include <vector>

#include "rewind_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return rwd::cli::run_cli(args, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "rewind: internal error: " << e.what() << "\n";
    return 2;
  }
}
