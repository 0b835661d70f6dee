#include <iostream>
#include <vector>

#include "garlink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return garlink::cli::run(args, std::cout, std::cerr);
}
