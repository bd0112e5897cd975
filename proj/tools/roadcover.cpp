#include <iostream>
#include <string>
#include <vector>

#include "roadcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return roadcover::dispatch(args, std::cout, std::cerr);
}
