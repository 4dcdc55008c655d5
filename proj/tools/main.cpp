#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int exit_code = 0;
  const auto config = turan::cli::parse_command_line(argc, argv, std::cout, std::cerr, exit_code);
  if (!config) {
    return exit_code;
  }
  return turan::cli::run(*config, std::cout, std::cerr);
}
