#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nusubdiv/graph.hpp"
#include "nusubdiv/path.hpp"

namespace nusubdiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A maximal source-to-sink path that respects edge orientations and repeats
// no vertex.  edge_ids/signs run parallel to the traversed edges: sign +1
// means the edge was walked tail->head, -1 head->tail.
struct Route {
  std::vector<int> verts;
  std::vector<int> edge_ids;
  std::vector<int> signs;
  int source_label = 0;
  int sink_label = 0;

  auto operator<=>(const Route&) const = default;
};

// All routes of an augmented graph, ordered lexicographically by vertex
// sequence with parallel edges tie-broken by edge id.  Throws
// std::invalid_argument when the graph is not augmented or when some inner
// vertex can be entered but not left.
std::vector<Route> enumerate_routes(const MixedGraph& g);

// One coordinate per edge of g: +1 on edges walked forward, -1 on edges
// walked against their stored direction, 0 elsewhere.
std::vector<Rational> signed_vector(const Route& r, const MixedGraph& g);

// Checks the flow conditions for x: net flow +1 at the source, -1 at the
// sink, 0 at inner vertices, where an edge contributes positively at its
// smaller endpoint; forward edges need x >= 0, backward edges x <= 0.
bool check_flow(const std::vector<Rational>& x, const MixedGraph& g);

// The pair of simplex vertices (e_i, e_j) named by the first and last edge
// labels of the route; i is reported as a position in I, j in J.
std::pair<std::vector<int>, std::vector<int>> route_to_product_vertex(
    const Route& r, const IndexedPath& p);

// True when the graph contains a simple directed cycle.  Walking a single
// bidirectional edge back and forth does not count.
bool has_directed_cycle(const MixedGraph& g);

// The vertices of the flow polytope: the signed vectors of all routes.
// Throws CycleError when the graph has a directed cycle.
std::vector<std::vector<Rational>> polytope_vertices(const MixedGraph& g);

// True when some three of the given points lie on a common line.
bool three_points_collinear(const std::vector<std::vector<Rational>>& pts);

std::string route_to_json(const Route& r, const MixedGraph& g);
std::string routes_to_json(const std::vector<Route>& rs, const MixedGraph& g);

}  // namespace nusubdiv
