#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nusubdiv/algebra.hpp"
#include "nusubdiv/flow.hpp"
#include "nusubdiv/graph.hpp"
#include "nusubdiv/path.hpp"

namespace nusubdiv {

// A simplex spanned by product-of-simplices vertices (i, j) with i in I and
// j in J; the generator vertices carry the monomial they came from.
struct Simplex {
  std::vector<std::pair<int, int>> verts;
  Monomial mono;
  int beta = 0;

  auto operator<=>(const Simplex&) const = default;
};

struct Triangulation {
  IndexedPath path;
  std::vector<Simplex> facets;       // top-degree terms
  std::vector<Simplex> lower_faces;  // positive beta exponent terms
  std::vector<std::pair<int, int>> cone_points;
  std::vector<std::pair<int, int>> dual_edges;  // indices into facets

  std::string to_json() const;
};

// The subdivision polynomial: for every nonempty subset S of the cells, the
// monomial of the intersected cell graphs times beta^(|S|-1).
BetaPoly build_p_nu(const IndexedPath& p);

// Interprets a reduced polynomial as a simplicial complex: every term
// contributes its generators as (i, j) vertices together with the valley
// cone points (v, v).  The beta exponent of each term must equal its
// codimension.  Throws std::invalid_argument when r is not reduced.
Triangulation triangulation_from_reduced(const BetaPoly& r, const IndexedPath& p);

// Pairs of facets whose monomials differ in exactly one generator.
std::vector<std::pair<int, int>> dual_graph(const std::vector<Simplex>& facets);

// Whether the facet spans a volume-one cell in the chart that drops the
// coordinates of max(I) and max(J).  Throws DegenerateSimplexError when the
// edge vectors are linearly dependent.
bool verify_unimodular(const Simplex& s, const IndexedPath& p);

struct CoverReport {
  int trials = 0;
  int min_cover = 0;
  int max_interior = 0;
  int violations = 0;
  bool ok = false;

  std::string text() const;
};

// Samples `trials` rational points of the ambient product of simplices with
// seeded integer weights and checks that every point lies in at least one
// facet and strictly inside at most one.
CoverReport verify_cover(const Triangulation& t, int trials, std::uint64_t seed);

struct CellVolumeReport {
  std::vector<long long> facet_counts;   // per cell
  std::vector<long long> expected;       // lattice path counts of the shifts
  long long total = 0;
  long long expected_total = 0;
  bool ok = false;

  std::string text() const;
};

// Reduces every cell monomial and compares facet counts against the path
// counts of the stripped cyclic shifts; the total must be binomial(a+b, a).
CellVolumeReport verify_cell_volumes(const IndexedPath& p);

// The polyhedral subdivision induced on the routes of the bidirectional
// augmented graph: cell i keeps the routes compatible with its spine edge.
struct SubdivisionComplex {
  IndexedPath path;
  MixedGraph graph;                 // augmented bidirectional graph
  std::vector<Route> routes;        // all routes of `graph`
  std::vector<int> spine_edge_ids;  // ids of (v_l, v_{l+1}), l = 1..w-1
  std::vector<std::vector<int>> cell_route_ids;  // per cell, indices into routes
  // face_vertices[mask] lists the (i, j) vertex set of the intersection of
  // the cells in the nonempty bitmask (bit l-1 = cell l).
  std::vector<std::vector<std::pair<int, int>>> face_vertices;
  bool hyperplanes_certified = false;
};

SubdivisionComplex simplex_subdivision(const IndexedPath& p);

// The (i, j) vertex set of the routes of the intersected cell graphs,
// augmented like the full graph.
std::vector<std::pair<int, int>> face_vertices_via_graphs(const IndexedPath& p,
                                                          const std::vector<int>& S);

}  // namespace nusubdiv
