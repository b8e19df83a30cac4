#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = kronkit::cli::run(args);
  std::cerr << r.report;
  if (!r.payload.empty()) {
    std::cout << r.payload;
    if (r.payload.back() != '\n') std::cout << '\n';
  }
  return r.exit_code;
}
