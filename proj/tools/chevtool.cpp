#include <iostream>
#include <string>
#include <vector>

#include "chev/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chev::dispatch(args, std::cout, std::cerr);
}
