#include <iostream>
#include <string>
#include <vector>

#include "nsbf/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return nsbf::run_main(args, std::cout, std::cerr);
}
