#include <iostream>

#include <rrkernel/cli.hpp>

int main(int argc, char** argv) {
  return rrkernel::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
