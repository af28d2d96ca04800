#include <iostream>
#include <vector>

#include "zinbiel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  zinbiel::cli::Report report = zinbiel::cli::run(args);
  std::cout << report.render();
  return report.exit_code;
}
