#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nusubdiv/algebra.hpp"
#include "nusubdiv/flow.hpp"
#include "nusubdiv/path.hpp"

namespace nusubdiv {

// An arc from letter E_i to letter N_j.  Minimal arcs have i = j, increasing
// arcs i <= j; arcs with j < i wrap around.
struct Arc {
  int i = 0;
  int j = 0;
  auto operator<=>(const Arc&) const = default;
};

inline bool is_minimal(const Arc& a) { return a.i == a.j; }
inline bool is_increasing(const Arc& a) { return a.i <= a.j; }

// Whether two arcs cross in the cyclic sense.  Arcs are compared through the
// positions of their endpoint letters (E_i sits just before N_i), so that
// E_i < N_j exactly when i <= j.
bool cyclically_crosses(const Arc& a, const Arc& b);

// Plain crossing for increasing arcs: i < i' <= j < j' up to swapping.
// Throws std::invalid_argument when either arc wraps.
bool crosses(const Arc& a, const Arc& b);

// A set of pairwise non-crossing arcs, kept sorted.
struct IJForest {
  std::vector<Arc> arcs;
  auto operator<=>(const IJForest&) const = default;
};

// All maximal sets of pairwise cyclically non-crossing arcs from I x J,
// sorted.  Guarded by the number of path steps.
std::vector<IJForest> enumerate_cyclic_ij_trees(const IndexedPath& p, int guard = 12);

// Same with increasing arcs and plain crossing.
std::vector<IJForest> enumerate_increasing_ij_trees(const IndexedPath& p, int guard = 12);

// Pairs (s, t) of tree indices such that the t-th tree arises from the s-th
// by swapping one arc (i, j) for (i', j') with i < i'.
std::vector<std::pair<int, int>> increasing_flip_covers(const std::vector<IJForest>& trees);

// The arc (source label, sink label) of a labelled route.
Arc phi_route_to_arc(const Route& r);

// The generators of m read as arcs, completed by the minimal arcs (v, v) of
// every valley v.  Generator endpoints must lie in I and J.
IJForest arcs_of_monomial(const Monomial& m, const IndexedPath& p);

// The unique arc of t that is maximal for p: either (1, n) or an arc (i, j)
// with j < i and no letter index strictly between j and i.  Throws
// std::invalid_argument unless exactly one such arc exists.
Arc maximal_arc(const IJForest& t, const IndexedPath& p);

// The maximal arc associated with the k-th cyclic peak: its E letter index
// paired with its N letter index.
Arc peak_arc(const IndexedPath& p, int k);

std::string trees_to_json(const std::vector<IJForest>& trees);

// The cover relation as a DOT digraph; nodes carry their arc list and are
// grouped by the number of flips from the minimum.
std::string hasse_to_dot(const std::vector<IJForest>& trees,
                         const std::vector<std::pair<int, int>>& covers);

}  // namespace nusubdiv
