#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nusubdiv/path.hpp"

namespace nusubdiv {

struct VerifyOptions {
  int trials = 1000;
  std::uint64_t seed = 1;
  int random_orders = 5;  // seeded random reduction orders tried per path
  int guard = 8;          // largest a+b verified exhaustively
  bool check_cover = true;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string path;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string text() const;
  std::string to_json() const;
};

// Runs the full cross-module battery for one path: route counts and flow
// conservation, the subdivision polynomial, reductions and their facet
// counts, unimodularity and covering of the triangulation, the tree
// correspondence, and the cell decomposition.
VerifyReport verify_path(const LatticePath& nu, const VerifyOptions& opt = {});

struct SweepReport {
  int max_steps = 0;
  int paths = 0;
  int failures = 0;
  std::vector<std::string> failed;  // "WORD: check name" lines

  bool ok() const { return failures == 0; }
  std::string text() const;
  std::string to_json() const;
};

// verify_path over every word with at most max_steps steps.
SweepReport sweep_paths(int max_steps, const VerifyOptions& opt = {});

}  // namespace nusubdiv
