#include <iostream>
#include <variant>

#include "cli.hpp"

int main(int argc, char** argv) {
  auto parsed = sumrank::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (const int* status = std::get_if<int>(&parsed)) return *status;
  return sumrank::cli::run(std::get<sumrank::cli::RunConfig>(parsed), std::cout, std::cerr);
}
