#include <unistd.h>

#include <iostream>

#include "quicksum/cli.hpp"

int main(int argc, char** argv) {
  using namespace quicksum::cli;
  auto parsed = parse_command_line(argc, argv, isatty(STDOUT_FILENO) != 0, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), std::cin, std::cout, std::cerr);
}
