#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "fanorr/cli.hpp"

int main(int argc, char** argv) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return fanorr::cli::run(argc, argv, std::cout, std::cerr, color);
}
