#include <iostream>

#include "chiy/cli.hpp"

int main(int argc, char** argv) {
  auto outcome = chiy::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
