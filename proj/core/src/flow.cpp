#include "nusubdiv/flow.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "nusubdiv/errors.hpp"

namespace nusubdiv {

namespace {

struct Move {
  int next = 0;
  int edge_id = 0;
  int sign = 0;

  auto operator<=>(const Move&) const = default;
};

std::map<int, std::vector<Move>> move_table(const MixedGraph& g) {
  std::map<int, std::vector<Move>> moves;
  for (int v : g.verts) moves[v];
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    const int id = static_cast<int>(k);
    switch (e.dir) {
      case Orientation::Forward:
        moves[e.tail].push_back(Move{e.head, id, +1});
        break;
      case Orientation::Backward:
        moves[e.head].push_back(Move{e.tail, id, -1});
        break;
      case Orientation::Bidirectional:
        moves[e.tail].push_back(Move{e.head, id, +1});
        moves[e.head].push_back(Move{e.tail, id, -1});
        break;
    }
  }
  for (auto& [v, ms] : moves) std::sort(ms.begin(), ms.end());
  return moves;
}

}  // namespace

std::vector<Route> enumerate_routes(const MixedGraph& g) {
  if (!g.augmented) throw std::invalid_argument("route enumeration needs an augmented graph");
  const auto moves = move_table(g);
  for (int v : g.verts) {
    if (!g.is_inner(v)) continue;
    bool enterable = false;
    for (const Edge& e : g.edges) {
      if (e.dir == Orientation::Bidirectional ? (e.tail == v || e.head == v)
                                              : (e.dir == Orientation::Forward ? e.head == v
                                                                               : e.tail == v)) {
        enterable = true;
        break;
      }
    }
    if (enterable && moves.at(v).empty()) {
      throw std::invalid_argument("no route can continue from inner vertex " + std::to_string(v));
    }
  }

  std::vector<Route> out;
  std::map<int, bool> on_path;
  Route cur;
  cur.verts.push_back(0);
  on_path[0] = true;

  auto dfs = [&](auto&& self, int v) -> void {
    if (g.is_sink(v)) {
      Route r = cur;
      r.source_label = g.edges[static_cast<std::size_t>(r.edge_ids.front())].label;
      r.sink_label = g.edges[static_cast<std::size_t>(r.edge_ids.back())].label;
      out.push_back(std::move(r));
      return;
    }
    for (const Move& m : moves.at(v)) {
      if (on_path[m.next]) continue;
      on_path[m.next] = true;
      cur.verts.push_back(m.next);
      cur.edge_ids.push_back(m.edge_id);
      cur.signs.push_back(m.sign);
      self(self, m.next);
      cur.verts.pop_back();
      cur.edge_ids.pop_back();
      cur.signs.pop_back();
      on_path[m.next] = false;
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<Rational> signed_vector(const Route& r, const MixedGraph& g) {
  std::vector<Rational> x(g.edges.size(), Rational(0));
  for (std::size_t k = 0; k < r.edge_ids.size(); ++k) {
    x[static_cast<std::size_t>(r.edge_ids[k])] = r.signs[k];
  }
  return x;
}

bool check_flow(const std::vector<Rational>& x, const MixedGraph& g) {
  if (x.size() != g.edges.size()) {
    throw std::invalid_argument("flow vector has " + std::to_string(x.size()) +
                                " coordinates for " + std::to_string(g.edges.size()) + " edges");
  }
  std::map<int, Rational> net;
  for (int v : g.verts) net[v] = 0;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    net[e.tail] += x[k];
    net[e.head] -= x[k];
    if (e.dir == Orientation::Forward && x[k] < 0) return false;
    if (e.dir == Orientation::Backward && x[k] > 0) return false;
  }
  for (int v : g.verts) {
    const Rational want = g.is_source(v) ? 1 : g.is_sink(v) ? -1 : 0;
    if (net[v] != want) return false;
  }
  return true;
}

std::pair<std::vector<int>, std::vector<int>> route_to_product_vertex(
    const Route& r, const IndexedPath& p) {
  auto locate = [](const std::vector<int>& set, int label, const char* name) {
    auto it = std::lower_bound(set.begin(), set.end(), label);
    if (label == 0 || it == set.end() || *it != label) {
      throw std::invalid_argument(std::string("route label ") + std::to_string(label) +
                                  " is not in " + name);
    }
    return static_cast<std::size_t>(it - set.begin());
  };
  std::vector<int> ei(p.I.size(), 0), ej(p.J.size(), 0);
  ei[locate(p.I, r.source_label, "I")] = 1;
  ej[locate(p.J, r.sink_label, "J")] = 1;
  return {ei, ej};
}

bool has_directed_cycle(const MixedGraph& g) {
  const auto moves = move_table(g);
  std::map<int, bool> on_path;
  std::vector<bool> edge_used(g.edges.size(), false);

  auto dfs = [&](auto&& self, int start, int v, int depth) -> bool {
    for (const Move& m : moves.at(v)) {
      if (edge_used[static_cast<std::size_t>(m.edge_id)]) continue;
      if (m.next == start && depth >= 1) return true;
      if (m.next <= start || on_path[m.next]) continue;
      on_path[m.next] = true;
      edge_used[static_cast<std::size_t>(m.edge_id)] = true;
      if (self(self, start, m.next, depth + 1)) return true;
      edge_used[static_cast<std::size_t>(m.edge_id)] = false;
      on_path[m.next] = false;
    }
    return false;
  };

  for (int start : g.verts) {
    on_path.clear();
    std::fill(edge_used.begin(), edge_used.end(), false);
    on_path[start] = true;
    if (dfs(dfs, start, start, 0)) return true;
  }
  return false;
}

std::vector<std::vector<Rational>> polytope_vertices(const MixedGraph& g) {
  if (has_directed_cycle(g)) {
    throw CycleError("graph has a directed cycle; its routes do not span the flow polytope");
  }
  std::vector<std::vector<Rational>> out;
  for (const Route& r : enumerate_routes(g)) out.push_back(signed_vector(r, g));
  return out;
}

bool three_points_collinear(const std::vector<std::vector<Rational>>& pts) {
  const std::size_t m = pts.size();
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      std::vector<Rational> u(pts[p].size());
      bool u_zero = true;
      std::size_t pivot = 0;
      for (std::size_t c = 0; c < u.size(); ++c) {
        u[c] = pts[q][c] - pts[p][c];
        if (u_zero && u[c] != 0) {
          u_zero = false;
          pivot = c;
        }
      }
      if (u_zero) return true;  // duplicate points
      for (std::size_t r = q + 1; r < m; ++r) {
        bool collinear = true;
        for (std::size_t c = 0; c < u.size() && collinear; ++c) {
          if (u[pivot] * (pts[r][c] - pts[p][c]) != (pts[r][pivot] - pts[p][pivot]) * u[c]) {
            collinear = false;
          }
        }
        if (collinear) return true;
      }
    }
  }
  return false;
}

namespace {

nlohmann::ordered_json route_json(const Route& r, const MixedGraph& g) {
  nlohmann::ordered_json j;
  j["route"] = nlohmann::ordered_json::array();
  for (int v : r.verts) {
    if (g.is_inner(v)) {
      j["route"].push_back(v);
    } else {
      j["route"].push_back(g.is_source(v) ? "s" : "t");
    }
  }
  j["signs"] = r.signs;
  j["edges"] = r.edge_ids;
  return j;
}

}  // namespace

std::string route_to_json(const Route& r, const MixedGraph& g) {
  return route_json(r, g).dump();
}

std::string routes_to_json(const std::vector<Route>& rs, const MixedGraph& g) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Route& r : rs) j.push_back(route_json(r, g));
  return j.dump();
}

}  // namespace nusubdiv
