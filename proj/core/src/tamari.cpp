#include "nusubdiv/tamari.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "nusubdiv/errors.hpp"

namespace nusubdiv {

namespace {

// Letter positions on the cycle: E_i just before N_i.
inline int ekey(int i) { return 2 * i; }
inline int nkey(int j) { return 2 * j + 1; }

inline bool chain(int a, int b, int c, int d) { return a < b && b < c && c < d; }

bool cyclically_crosses_one_way(const Arc& a, const Arc& b) {
  const int p = ekey(a.i), q = nkey(a.j);
  const int p2 = ekey(b.i), q2 = nkey(b.j);
  return chain(p, p2, q, q2)     // i < i' < j < j'
         || chain(q2, p, p2, q)  // j' < i < i' < j
         || chain(q, q2, p, p2)  // j < j' < i < i'
         || chain(p2, q, q2, p)  // i' < j < j' < i
         || chain(p, q2, p2, q)  // i < j' < i' < j
         || chain(q, p, q2, p2); // j < i < j' < i'
}

}  // namespace

bool cyclically_crosses(const Arc& a, const Arc& b) {
  return cyclically_crosses_one_way(a, b) || cyclically_crosses_one_way(b, a);
}

bool crosses(const Arc& a, const Arc& b) {
  if (!is_increasing(a) || !is_increasing(b)) {
    throw std::invalid_argument("plain crossing is defined for increasing arcs only");
  }
  return (a.i < b.i && b.i <= a.j && a.j < b.j) ||
         (b.i < a.i && a.i <= b.j && b.j < a.j);
}

namespace {

std::vector<IJForest> maximal_noncrossing_sets(const IndexedPath& p,
                                               const std::vector<Arc>& arcs,
                                               bool cyclic, int guard) {
  if (p.a() + p.b() > guard) {
    throw ResourceLimitError("tree enumeration is guarded at " + std::to_string(guard) +
                             " path steps");
  }
  const std::size_t m = arcs.size();
  if (m > 64) throw ResourceLimitError("too many arcs for tree enumeration");
  std::vector<std::uint64_t> compat(m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y) continue;
      const bool cross = cyclic ? cyclically_crosses(arcs[x], arcs[y])
                                : crosses(arcs[x], arcs[y]);
      if (!cross) compat[x] |= std::uint64_t{1} << y;
    }
  }

  std::vector<IJForest> out;
  auto emit = [&](std::uint64_t r) {
    IJForest f;
    for (std::size_t x = 0; x < m; ++x) {
      if (r >> x & 1) f.arcs.push_back(arcs[x]);
    }
    out.push_back(std::move(f));
  };

  // Bron-Kerbosch with pivoting on the compatibility graph.
  auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t cand, std::uint64_t excl) -> void {
    if (cand == 0 && excl == 0) {
      emit(r);
      return;
    }
    const std::uint64_t both = cand | excl;
    const int pivot = std::countr_zero(both);
    std::uint64_t rest = cand & ~compat[static_cast<std::size_t>(pivot)];
    while (rest) {
      const int v = std::countr_zero(rest);
      const std::uint64_t bit = std::uint64_t{1} << v;
      rest &= rest - 1;
      self(self, r | bit, cand & compat[static_cast<std::size_t>(v)],
           excl & compat[static_cast<std::size_t>(v)]);
      cand &= ~bit;
      excl |= bit;
    }
  };
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  bk(bk, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IJForest> enumerate_cyclic_ij_trees(const IndexedPath& p, int guard) {
  std::vector<Arc> arcs;
  for (int i : p.I) {
    for (int j : p.J) arcs.push_back(Arc{i, j});
  }
  return maximal_noncrossing_sets(p, arcs, /*cyclic=*/true, guard);
}

std::vector<IJForest> enumerate_increasing_ij_trees(const IndexedPath& p, int guard) {
  std::vector<Arc> arcs;
  for (int i : p.I) {
    for (int j : p.J) {
      if (i <= j) arcs.push_back(Arc{i, j});
    }
  }
  return maximal_noncrossing_sets(p, arcs, /*cyclic=*/false, guard);
}

std::vector<std::pair<int, int>> increasing_flip_covers(const std::vector<IJForest>& trees) {
  std::vector<std::pair<int, int>> covers;
  for (std::size_t s = 0; s < trees.size(); ++s) {
    for (std::size_t t = 0; t < trees.size(); ++t) {
      if (s == t) continue;
      std::vector<Arc> removed, added;
      std::set_difference(trees[s].arcs.begin(), trees[s].arcs.end(),
                          trees[t].arcs.begin(), trees[t].arcs.end(),
                          std::back_inserter(removed));
      std::set_difference(trees[t].arcs.begin(), trees[t].arcs.end(),
                          trees[s].arcs.begin(), trees[s].arcs.end(),
                          std::back_inserter(added));
      if (removed.size() == 1 && added.size() == 1 && removed[0].i < added[0].i) {
        covers.emplace_back(static_cast<int>(s), static_cast<int>(t));
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

Arc phi_route_to_arc(const Route& r) {
  if (r.source_label == 0 || r.sink_label == 0) {
    throw std::invalid_argument("route is missing source or sink labels");
  }
  return Arc{r.source_label, r.sink_label};
}

IJForest arcs_of_monomial(const Monomial& m, const IndexedPath& p) {
  IJForest f;
  for (const Generator& g : m.gens) {
    if (!std::binary_search(p.I.begin(), p.I.end(), g.i) ||
        !std::binary_search(p.J.begin(), p.J.end(), g.j)) {
      throw std::invalid_argument("generator " + g.str() + " is not an I x J arc");
    }
    f.arcs.push_back(Arc{g.i, g.j});
  }
  for (int v : p.V) f.arcs.push_back(Arc{v, v});
  std::sort(f.arcs.begin(), f.arcs.end());
  f.arcs.erase(std::unique(f.arcs.begin(), f.arcs.end()), f.arcs.end());
  return f;
}

namespace {

bool is_maximal_arc(const Arc& a, const IndexedPath& p) {
  if (a.i == 1 && a.j == p.n) return true;
  if (a.j >= a.i) return false;
  for (int k = a.j + 1; k < a.i; ++k) {
    if (std::binary_search(p.I.begin(), p.I.end(), k) ||
        std::binary_search(p.J.begin(), p.J.end(), k)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Arc maximal_arc(const IJForest& t, const IndexedPath& p) {
  std::vector<Arc> found;
  for (const Arc& a : t.arcs) {
    if (is_maximal_arc(a, p)) found.push_back(a);
  }
  if (found.size() != 1) {
    throw std::invalid_argument("expected exactly one maximal arc, found " +
                                std::to_string(found.size()));
  }
  return found.front();
}

Arc peak_arc(const IndexedPath& p, int k) {
  if (k < 1 || k > p.w) {
    throw std::invalid_argument("peak index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(p.w));
  }
  const auto [npos, epos] = p.cyclic_peaks[static_cast<std::size_t>(k) - 1];
  return Arc{p.letters[static_cast<std::size_t>(epos) - 1].index,
             p.letters[static_cast<std::size_t>(npos) - 1].index};
}

std::string trees_to_json(const std::vector<IJForest>& trees) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const IJForest& t : trees) {
    nlohmann::ordered_json jt = nlohmann::ordered_json::array();
    for (const Arc& a : t.arcs) jt.push_back({a.i, a.j});
    arr.push_back(jt);
  }
  return arr.dump();
}

namespace {

std::string arc_list_label(const IJForest& t) {
  std::string s;
  for (const Arc& a : t.arcs) {
    s += "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
  }
  return s;
}

}  // namespace

std::string hasse_to_dot(const std::vector<IJForest>& trees,
                         const std::vector<std::pair<int, int>>& covers) {
  // Longest chain of flips from a minimal element.
  std::vector<int> rank(trees.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [s, t] : covers) {
      if (rank[static_cast<std::size_t>(t)] < rank[static_cast<std::size_t>(s)] + 1) {
        rank[static_cast<std::size_t>(t)] = rank[static_cast<std::size_t>(s)] + 1;
        changed = true;
      }
    }
  }
  std::string s = "digraph H {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < trees.size(); ++k) {
    s += "  T" + std::to_string(k) + " [label=\"" + arc_list_label(trees[k]) +
         "\", rank=" + std::to_string(rank[k]) + "];\n";
  }
  const int max_rank = trees.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
  for (int r = 0; r <= max_rank; ++r) {
    std::string group;
    for (std::size_t k = 0; k < trees.size(); ++k) {
      if (rank[k] == r) group += " T" + std::to_string(k) + ";";
    }
    if (!group.empty()) s += "  { rank=same;" + group + " }\n";
  }
  for (const auto& [from, to] : covers) {
    s += "  T" + std::to_string(from) + " -> T" + std::to_string(to) + ";\n";
  }
  s += "}\n";
  return s;
}

}  // namespace nusubdiv
