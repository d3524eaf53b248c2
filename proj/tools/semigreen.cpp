// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "semigreen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semigreen::run_command(args, std::cout, std::cerr);
}
