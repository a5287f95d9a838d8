#include <iostream>
#include <string>
#include <vector>

#include "stratify/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stratify::dispatch(args, std::cout, std::cerr);
}
