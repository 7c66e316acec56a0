#pragma once
// Command-line front end. run_cli is the whole program minus process exit,
// factored this way so tests can drive every command in-process.
//
// Commands:
//   validate <input>                     check a diagram or datum file
//   enum-e <input> [--shift 2p,2q]      index entries per shift
//   centralizer <input> [--oracle] [--shift 2p,2q] [--elements]
//   classify <input>                     verdict for one datum
//   search <type> <predicate> [--rank-bound N] [--jobs N]
//   census <type> [--rank-bound N] [--jobs N]
//   render <input> [--ascii|--svg] [--highlight SPEC]
//
// Common flags: --format json|text. Inputs are file paths, or inline JSON
// when the argument starts with '{'. Exit codes: 0 success/verified,
// 1 validation failure or oracle mismatch, 2 usage or I/O error.

#include <string>
#include <vector>

namespace nilpair {

struct CliResult {
  int exit_code = 0;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace nilpair
