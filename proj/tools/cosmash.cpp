#include <iostream>
#include <string>
#include <vector>

#include "cosmash/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = cosmash::cli::run_command(args);
  std::cout << result.output;
  return result.status;
}
