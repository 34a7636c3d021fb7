#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nusubdiv {

enum class Step : unsigned char { E, N };

inline char step_char(Step s) { return s == Step::E ? 'E' : 'N'; }

// A monotone lattice path from (0,0) to (a,b): a word over {E, N}.
struct LatticePath {
  std::vector<Step> steps;

  int east() const;
  int north() const;
  int size() const { return static_cast<int>(steps.size()); }

  // Parses a word such as "NEENE"; throws std::invalid_argument on any
  // character other than 'E' or 'N'.
  static LatticePath parse(std::string_view word);
  std::string str() const;

  auto operator<=>(const LatticePath&) const = default;
};

struct Letter {
  Step step;
  int index;
  auto operator<=>(const Letter&) const = default;
};

// A closed path with its letter indexing.
//
// I collects the indices of E letters, J the indices of N letters, and
// V = I ∩ J the valley indices v_1 < ... < v_w.  n is the largest index,
// and I ∪ J = {1, ..., n}.  cyclic_peaks holds the (N-position, E-position)
// pairs of consecutive NE letters, 1-based into `letters`, listed from the
// first such pair; the wrap-around pair (last letter, first letter) comes
// last.
struct IndexedPath {
  std::vector<Letter> letters;
  std::vector<int> I, J, V;
  int n = 0;
  int w = 0;
  std::vector<std::pair<int, int>> cyclic_peaks;

  int a() const { return static_cast<int>(I.size()) - 1; }
  int b() const { return static_cast<int>(J.size()) - 1; }
  LatticePath word() const;
  std::string str() const;      // e.g. "E1N1E2E3N3E4N4"
  std::string to_json() const;  // {"letters":[["E",1],...],"I":[...],"J":[...],"V":[...],"n":...}

  // Computes I/J/V/n/w and the cyclic peaks from an indexed letter sequence.
  static IndexedPath from_letters(std::vector<Letter> letters);

  auto operator<=>(const IndexedPath&) const = default;
};

// E nu N.
LatticePath close_path(const LatticePath& nu);

// Assigns the canonical indices to a closed path (one that starts with E and
// ends with N): a counter increments with each letter, except that the first
// N of every N-run repeats the index of the E preceding the run.
IndexedPath canonical_index(const LatticePath& closed);

// Convenience: canonical_index(close_path(nu)).
IndexedPath index_path(const LatticePath& nu);

// Rotates the closed path so that it starts at the E of the k-th cyclic peak
// (1 <= k <= w).  Letters keep their original indices.  The w-th shift is the
// path itself.
IndexedPath cyclic_shift(const IndexedPath& p, int k);

// Maps each original index to the index the same letter receives when the
// k-th cyclic shift is re-indexed canonically.  Entry 0 is unused.
std::vector<int> shift_relabel(const IndexedPath& p, int k);

// Removes the leading E and the trailing N.
LatticePath strip(const IndexedPath& p);

// Number of monotone lattice paths with the same endpoint as nu that stay
// weakly above nu.  Computed by dynamic programming over the heights of the
// E steps.
long long nu_catalan(const LatticePath& nu);

// True when `path` stays weakly above `nu`; both must share the endpoint
// (throws std::invalid_argument otherwise).
bool weakly_above(const LatticePath& path, const LatticePath& nu);

// All paths weakly above nu, in lexicographic order (E < N).  Guarded:
// throws ResourceLimitError when a+b exceeds `guard` steps.
std::vector<LatticePath> enumerate_paths_weakly_above(const LatticePath& nu,
                                                      int guard = 24);

long long binomial(int n, int k);

}  // namespace nusubdiv
