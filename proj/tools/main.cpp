#include <iostream>

#include "abbvloc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = abbvloc::cli::run_command_line(args, std::cin);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
