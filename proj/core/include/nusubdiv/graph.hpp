#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nusubdiv/path.hpp"

namespace nusubdiv {

enum class Orientation : unsigned char { Forward, Backward, Bidirectional };

// An edge always stores tail < head in the vertex order s < 1 < ... < n < t.
// Forward edges are traversed tail->head, Backward edges head->tail, and
// Bidirectional edges either way.  label carries the letter index of a
// source edge (E_i) or sink edge (N_j); 0 means unlabelled.
struct Edge {
  int tail = 0;
  int head = 0;
  Orientation dir = Orientation::Forward;
  int label = 0;

  auto operator<=>(const Edge&) const = default;
};

// A graph on the inner vertices [n], optionally augmented by a source (id 0)
// and a sink (id n+1).  Vertices are kept as an explicit sorted list so that
// contractions can remove them; edges are kept sorted and may contain
// parallel copies.
struct MixedGraph {
  std::vector<int> verts;
  bool augmented = false;
  int sink_id = -1;
  std::vector<Edge> edges;

  bool is_source(int v) const { return augmented && v == 0; }
  bool is_sink(int v) const { return augmented && v == sink_id; }
  bool is_inner(int v) const { return !is_source(v) && !is_sink(v); }
  bool has_vertex(int v) const;
  void sort_edges();

  auto operator<=>(const MixedGraph&) const = default;
};

// The tree on [n] whose edges (i, j), i < j, connect letters E_i and N_j
// whenever the subword E_i ... N_j of the closed path contains no valley
// letters other than possibly E_iN_i and E_jN_j.  All edges point forward.
MixedGraph nu_graph(const IndexedPath& p);

// Same tree, but every edge between two valley indices becomes bidirectional.
MixedGraph bidirectional_nu_graph(const IndexedPath& p);

// Adds a source 0 with edges to every i in I and a sink n+1 with edges from
// every j in J.  Source edges are labelled i, sink edges j.
MixedGraph partial_augment(const MixedGraph& g, const IndexedPath& p);

// Adds source and sink edges for every inner vertex.
MixedGraph full_augment(const MixedGraph& g);

// The i-th cell graph (1 <= i <= w): the bidirectional tree with its valley
// spine replaced by the cycle-minus-one-edge on v_1 < ... < v_w.  The forward
// spine edges (v_l, v_{l+1}) for l != i survive, and the backward edge
// (v_1, v_w) is present unless i = w.  cell_graph(p, w) equals nu_graph(p).
MixedGraph cell_graph(const IndexedPath& p, int i);

// Edge-set intersection of the cell graphs indexed by the nonempty set S.
MixedGraph intersect_cell_graphs(const IndexedPath& p, const std::vector<int>& S);

enum class ContractScope { All, InnerOnly };

// Repeatedly contracts idle edges: a non-bidirectional edge is idle when it
// is the unique way to leave its traversal tail or the unique way to enter
// its traversal head.  Bidirectional edges count as both in and out at each
// endpoint and are never contracted here.  With ContractScope::InnerOnly only
// edges between two inner vertices are touched.  An edge joining source and
// sink is never contracted.
MixedGraph contract_idle_edges(const MixedGraph& g, ContractScope scope = ContractScope::All);

// Contracts every bidirectional edge between inner vertices.
MixedGraph contract_bidirectional_edges(const MixedGraph& g);

// Flips one backward edge to forward.  The flow coordinate of the edge is
// negated implicitly; routes of the modified graph traverse it tail->head.
MixedGraph reflect_backward_edge(const MixedGraph& g, const Edge& e);

// Renames inner vertices via sigma (sigma[old] = new, entry 0 ignored) and
// re-normalises edges: an edge whose traversal now runs from a larger to a
// smaller vertex is stored as a backward edge, and vice versa.  The sink id
// is preserved.
MixedGraph relabel(const MixedGraph& g, const std::vector<int>& sigma);

std::string to_dot(const MixedGraph& g);
std::string to_json(const MixedGraph& g);

}  // namespace nusubdiv
