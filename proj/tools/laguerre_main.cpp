#include <iostream>
#include <string>
#include <vector>

#include "laguerre/cli.hpp"
#include "laguerre/sweep.hpp"

int main(int argc, char** argv) {
  laguerre::configure_threads_from_env();
  std::vector<std::string> args(argv + 1, argv + argc);
  return laguerre::run_cli(args, std::cout, std::cerr);
}
