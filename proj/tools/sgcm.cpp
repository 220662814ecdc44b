#include <iostream>
#include <string>
#include <vector>

#include "sgcm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const sgcm::CliResult res = sgcm::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
