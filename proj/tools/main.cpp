#include <iostream>
#include <string>
#include <vector>

#include "hgsearch/cli.hpp"

int main(int argc, char** argv) {
  hgsearch::cli::install_interrupt_handler();
  std::vector<std::string> args(argv + 1, argv + argc);
  return hgsearch::cli::run(args, std::cout, std::cerr);
}
