#include "superleib/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = superleib::cli::run_command(args);
  std::cout << r.output;
  std::cerr << r.errors;
  return r.exit_code;
}
