#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nusubdiv {

struct RunConfig {
  std::string command;  // index|graph|routes|reduce|triangulate|tamari|verify|sweep
  std::string word;
  std::string kind = "tilde-b";   // graph/routes: nu|nu-b|tilde|tilde-b|cell|tilde-cell
  std::string target = "p-nu";    // reduce: p-nu|cell
  int cell = 1;
  std::string order = "rho-len";  // rho-len|lex|random
  std::string length_variant = "span";
  std::string beta = "full";      // full|0
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "text";  // text|json|dot
  std::string out;              // output file; empty writes to stdout
  int trials = 1000;
  int max_size = 6;  // sweep
  std::string mode = "cyclic";  // tamari: cyclic|increasing
  bool force = false;
};

struct ParseResult {
  int exit_code = -1;  // >= 0: exit immediately with this code
  RunConfig cfg;
};

// Parses command line arguments (program name excluded).  Help and usage
// errors are written to the given streams and reported via exit_code.
ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

// Executes the parsed command, writing the report to `out` (or the file named
// by cfg.out) and diagnostics to `err`.  Returns 0 on success, 1 when a
// verification fails, 2 on usage errors, 3 when a resource guard trips.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace nusubdiv
