#include <unistd.h>

#include <iostream>

#include "fbweyl/cli.hpp"

int main(int argc, char** argv) {
  return fbweyl::cli::main_entry(argc, argv, std::cout, std::cerr, ::isatty(STDOUT_FILENO) != 0);
}
