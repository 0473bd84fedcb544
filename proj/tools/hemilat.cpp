#include <iostream>
#include <string>
#include <vector>

#include <hemilat/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hemilat::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
