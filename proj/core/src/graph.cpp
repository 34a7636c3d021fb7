#include "nusubdiv/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "nusubdiv/errors.hpp"

namespace nusubdiv {

bool MixedGraph::has_vertex(int v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

void MixedGraph::sort_edges() { std::sort(edges.begin(), edges.end()); }

namespace {

// Traversal endpoints of a non-bidirectional edge.
std::pair<int, int> traversal(const Edge& e) {
  return e.dir == Orientation::Backward ? std::make_pair(e.head, e.tail)
                                        : std::make_pair(e.tail, e.head);
}

bool departs(const Edge& e, int v) {
  switch (e.dir) {
    case Orientation::Forward: return e.tail == v;
    case Orientation::Backward: return e.head == v;
    case Orientation::Bidirectional: return e.tail == v || e.head == v;
  }
  return false;
}

bool arrives(const Edge& e, int v) {
  switch (e.dir) {
    case Orientation::Forward: return e.head == v;
    case Orientation::Backward: return e.tail == v;
    case Orientation::Bidirectional: return e.tail == v || e.head == v;
  }
  return false;
}

Edge normalised(int from, int to, Orientation dir, int label) {
  Edge e;
  if (dir == Orientation::Bidirectional) {
    e.tail = std::min(from, to);
    e.head = std::max(from, to);
  } else if (from < to) {
    e.tail = from;
    e.head = to;
    dir = Orientation::Forward;
  } else {
    e.tail = to;
    e.head = from;
    dir = Orientation::Backward;
  }
  e.dir = dir;
  e.label = label;
  return e;
}

int letter_position(const IndexedPath& p, Step st, int index) {
  for (std::size_t pos = 0; pos < p.letters.size(); ++pos) {
    if (p.letters[pos].step == st && p.letters[pos].index == index) {
      return static_cast<int>(pos);
    }
  }
  throw std::logic_error("letter not found");
}

}  // namespace

MixedGraph nu_graph(const IndexedPath& p) {
  MixedGraph g;
  g.verts.resize(static_cast<std::size_t>(p.n));
  for (int v = 1; v <= p.n; ++v) g.verts[static_cast<std::size_t>(v) - 1] = v;
  for (int i : p.I) {
    const int from = letter_position(p, Step::E, i);
    for (int j : p.J) {
      if (i >= j) continue;
      const int to = letter_position(p, Step::N, j);
      bool clean = true;
      for (int pos = from; pos <= to && clean; ++pos) {
        const int idx = p.letters[static_cast<std::size_t>(pos)].index;
        if (idx != i && idx != j &&
            std::binary_search(p.V.begin(), p.V.end(), idx)) {
          clean = false;
        }
      }
      if (clean) g.edges.push_back(Edge{i, j, Orientation::Forward, 0});
    }
  }
  g.sort_edges();
  return g;
}

MixedGraph bidirectional_nu_graph(const IndexedPath& p) {
  MixedGraph g = nu_graph(p);
  for (Edge& e : g.edges) {
    if (std::binary_search(p.V.begin(), p.V.end(), e.tail) &&
        std::binary_search(p.V.begin(), p.V.end(), e.head)) {
      e.dir = Orientation::Bidirectional;
    }
  }
  g.sort_edges();
  return g;
}

MixedGraph partial_augment(const MixedGraph& g, const IndexedPath& p) {
  if (g.augmented) throw std::invalid_argument("graph is already augmented");
  MixedGraph out = g;
  out.augmented = true;
  out.sink_id = p.n + 1;
  out.verts.insert(out.verts.begin(), 0);
  out.verts.push_back(out.sink_id);
  for (int i : p.I) out.edges.push_back(Edge{0, i, Orientation::Forward, i});
  for (int j : p.J) out.edges.push_back(Edge{j, out.sink_id, Orientation::Forward, j});
  out.sort_edges();
  return out;
}

MixedGraph full_augment(const MixedGraph& g) {
  if (g.augmented) throw std::invalid_argument("graph is already augmented");
  MixedGraph out = g;
  out.augmented = true;
  out.sink_id = (g.verts.empty() ? 0 : g.verts.back()) + 1;
  out.verts.insert(out.verts.begin(), 0);
  out.verts.push_back(out.sink_id);
  for (int v : g.verts) {
    out.edges.push_back(Edge{0, v, Orientation::Forward, v});
    out.edges.push_back(Edge{v, out.sink_id, Orientation::Forward, v});
  }
  out.sort_edges();
  return out;
}

MixedGraph cell_graph(const IndexedPath& p, int i) {
  if (i < 1 || i > p.w) {
    throw std::invalid_argument("cell index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(p.w));
  }
  MixedGraph g = bidirectional_nu_graph(p);
  std::erase_if(g.edges, [](const Edge& e) { return e.dir == Orientation::Bidirectional; });
  for (int l = 1; l < p.w; ++l) {
    if (l == i) continue;
    g.edges.push_back(Edge{p.V[static_cast<std::size_t>(l) - 1],
                           p.V[static_cast<std::size_t>(l)], Orientation::Forward, 0});
  }
  if (i != p.w) {
    g.edges.push_back(Edge{p.V.front(), p.V.back(), Orientation::Backward, 0});
  }
  g.sort_edges();
  return g;
}

MixedGraph intersect_cell_graphs(const IndexedPath& p, const std::vector<int>& S) {
  if (S.empty()) throw std::invalid_argument("cell set must be nonempty");
  MixedGraph out = cell_graph(p, S.front());
  for (std::size_t k = 1; k < S.size(); ++k) {
    const MixedGraph next = cell_graph(p, S[k]);
    std::vector<Edge> kept;
    std::set_intersection(out.edges.begin(), out.edges.end(), next.edges.begin(),
                          next.edges.end(), std::back_inserter(kept));
    out.edges = std::move(kept);
  }
  return out;
}

namespace {

// Merges vertex `gone` into `rep`, rewriting and re-normalising all edges
// except the one at `skip`.
MixedGraph merge_vertices(const MixedGraph& g, std::size_t skip, int gone, int rep) {
  MixedGraph out;
  out.augmented = g.augmented;
  out.sink_id = g.sink_id;
  out.verts = g.verts;
  std::erase(out.verts, gone);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k == skip) continue;
    const Edge& e = g.edges[k];
    int x = e.tail == gone ? rep : e.tail;
    int y = e.head == gone ? rep : e.head;
    if (x == y) throw std::invalid_argument("contraction would create a loop");
    if (e.dir == Orientation::Bidirectional) {
      out.edges.push_back(normalised(x, y, Orientation::Bidirectional, e.label));
    } else {
      auto [from, to] = traversal(e);
      from = from == gone ? rep : from;
      to = to == gone ? rep : to;
      out.edges.push_back(normalised(from, to, Orientation::Forward, e.label));
    }
  }
  out.sort_edges();
  return out;
}

}  // namespace

MixedGraph contract_idle_edges(const MixedGraph& g, ContractScope scope) {
  MixedGraph cur = g;
  for (;;) {
    bool contracted = false;
    for (std::size_t k = 0; k < cur.edges.size(); ++k) {
      const Edge& e = cur.edges[k];
      if (e.dir == Orientation::Bidirectional) continue;
      auto [from, to] = traversal(e);
      if (scope == ContractScope::InnerOnly &&
          (!cur.is_inner(from) || !cur.is_inner(to))) {
        continue;
      }
      if (!cur.is_inner(from) && !cur.is_inner(to)) continue;  // joins source and sink
      int out_from = 0, in_to = 0;
      for (const Edge& o : cur.edges) {
        if (departs(o, from)) ++out_from;
        if (arrives(o, to)) ++in_to;
      }
      if (out_from != 1 && in_to != 1) continue;
      int rep, gone;
      if (!cur.is_inner(from)) {
        rep = from;
        gone = to;
      } else if (!cur.is_inner(to)) {
        rep = to;
        gone = from;
      } else {
        rep = std::min(from, to);
        gone = std::max(from, to);
      }
      cur = merge_vertices(cur, k, gone, rep);
      contracted = true;
      break;
    }
    if (!contracted) return cur;
  }
}

MixedGraph contract_bidirectional_edges(const MixedGraph& g) {
  MixedGraph cur = g;
  for (;;) {
    bool contracted = false;
    for (std::size_t k = 0; k < cur.edges.size(); ++k) {
      const Edge& e = cur.edges[k];
      if (e.dir != Orientation::Bidirectional) continue;
      if (!cur.is_inner(e.tail) || !cur.is_inner(e.head)) continue;
      cur = merge_vertices(cur, k, e.head, e.tail);
      contracted = true;
      break;
    }
    if (!contracted) return cur;
  }
}

MixedGraph reflect_backward_edge(const MixedGraph& g, const Edge& e) {
  if (e.dir != Orientation::Backward) {
    throw std::invalid_argument("edge is not backward");
  }
  MixedGraph out = g;
  auto it = std::find(out.edges.begin(), out.edges.end(), e);
  if (it == out.edges.end()) throw std::invalid_argument("edge not found in graph");
  it->dir = Orientation::Forward;
  out.sort_edges();
  return out;
}

MixedGraph relabel(const MixedGraph& g, const std::vector<int>& sigma) {
  auto map_vertex = [&](int v) {
    if (!g.is_inner(v)) return v;
    if (v <= 0 || v >= static_cast<int>(sigma.size()) || sigma[static_cast<std::size_t>(v)] == 0) {
      throw std::invalid_argument("relabel map does not cover vertex " + std::to_string(v));
    }
    return sigma[static_cast<std::size_t>(v)];
  };
  MixedGraph out;
  out.augmented = g.augmented;
  out.sink_id = g.sink_id;
  for (int v : g.verts) out.verts.push_back(map_vertex(v));
  std::sort(out.verts.begin(), out.verts.end());
  if (std::adjacent_find(out.verts.begin(), out.verts.end()) != out.verts.end()) {
    throw std::invalid_argument("relabel map is not injective");
  }
  for (const Edge& e : g.edges) {
    if (e.dir == Orientation::Bidirectional) {
      out.edges.push_back(normalised(map_vertex(e.tail), map_vertex(e.head),
                                     Orientation::Bidirectional, e.label));
    } else {
      auto [from, to] = traversal(e);
      out.edges.push_back(normalised(map_vertex(from), map_vertex(to),
                                     Orientation::Forward, e.label));
    }
  }
  out.sort_edges();
  return out;
}

namespace {

std::string vertex_name(const MixedGraph& g, int v) {
  if (g.is_source(v)) return "s";
  if (g.is_sink(v)) return "t";
  return std::to_string(v);
}

std::string edge_label(const MixedGraph& g, const Edge& e) {
  if (e.label == 0) return "";
  if (g.is_source(e.tail)) return "E" + std::to_string(e.label);
  if (g.is_sink(e.head)) return "N" + std::to_string(e.label);
  return std::to_string(e.label);
}

}  // namespace

std::string to_dot(const MixedGraph& g) {
  std::string s = "digraph G {\n  rankdir=LR;\n";
  for (int v : g.verts) {
    s += "  \"" + vertex_name(g, v) + "\"";
    if (!g.is_inner(v)) s += " [shape=diamond]";
    s += ";\n";
  }
  for (const Edge& e : g.edges) {
    s += "  \"" + vertex_name(g, e.tail) + "\" -> \"" + vertex_name(g, e.head) + "\"";
    std::vector<std::string> attrs;
    if (e.dir == Orientation::Backward) attrs.push_back("dir=back");
    if (e.dir == Orientation::Bidirectional) attrs.push_back("dir=both");
    if (!g.is_inner(e.tail) || !g.is_inner(e.head)) attrs.push_back("style=dashed");
    const std::string label = edge_label(g, e);
    if (!label.empty()) attrs.push_back("label=\"" + label + "\"");
    if (!attrs.empty()) {
      s += " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) {
        if (k) s += ", ";
        s += attrs[k];
      }
      s += "]";
    }
    s += ";\n";
  }
  s += "}\n";
  return s;
}

std::string to_json(const MixedGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v : g.verts) {
    if (g.is_inner(v)) {
      j["vertices"].push_back(v);
    } else {
      j["vertices"].push_back(vertex_name(g, v));
    }
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges) {
    nlohmann::ordered_json je;
    if (g.is_inner(e.tail)) {
      je["tail"] = e.tail;
    } else {
      je["tail"] = vertex_name(g, e.tail);
    }
    if (g.is_inner(e.head)) {
      je["head"] = e.head;
    } else {
      je["head"] = vertex_name(g, e.head);
    }
    je["dir"] = e.dir == Orientation::Forward ? "F"
               : e.dir == Orientation::Backward ? "B"
                                                : "Bi";
    const std::string label = edge_label(g, e);
    if (!label.empty()) je["label"] = label;
    j["edges"].push_back(je);
  }
  return j.dump();
}

}  // namespace nusubdiv
