#include <iostream>
#include <string>
#include <vector>

#include "slacqm/cli.hpp"
#include "slacqm/platform.hpp"

int main(int argc, char** argv) {
  slacqm::platform::ensure_sound_blas(argv);
  std::vector<std::string> args(argv + 1, argv + argc);
  return slacqm::cli::run(args, std::cout, std::cerr);
}
