#include <cstdio>
#include <string>
#include <vector>

#include "nilpair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  nilpair::CliResult res = nilpair::run_cli(args);
  std::fputs(res.out.c_str(), stdout);
  return res.exit_code;
}
