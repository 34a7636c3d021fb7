#include "nusubdiv/triangulate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "nusubdiv/errors.hpp"

namespace nusubdiv {

BetaPoly build_p_nu(const IndexedPath& p) {
  BetaPoly out;
  for (unsigned mask = 1; mask < (1u << p.w); ++mask) {
    std::vector<int> S;
    for (int l = 1; l <= p.w; ++l) {
      if (mask >> (l - 1) & 1) S.push_back(l);
    }
    const Monomial m = monomial_of_graph(intersect_cell_graphs(p, S));
    out.add(m, static_cast<int>(S.size()) - 1, 1);
  }
  return out;
}

namespace {

Simplex term_to_simplex(const Monomial& m, int beta, const IndexedPath& p) {
  Simplex s;
  s.mono = m;
  s.beta = beta;
  for (const Generator& g : m.gens) {
    if (!std::binary_search(p.I.begin(), p.I.end(), g.i) ||
        !std::binary_search(p.J.begin(), p.J.end(), g.j)) {
      throw std::invalid_argument("generator " + g.str() +
                                  " does not name a product vertex");
    }
    s.verts.emplace_back(g.i, g.j);
  }
  for (int v : p.V) s.verts.emplace_back(v, v);
  std::sort(s.verts.begin(), s.verts.end());
  s.verts.erase(std::unique(s.verts.begin(), s.verts.end()), s.verts.end());
  return s;
}

}  // namespace

Triangulation triangulation_from_reduced(const BetaPoly& r, const IndexedPath& p) {
  if (!r.is_reduced()) {
    throw std::invalid_argument("polynomial is not in reduced form");
  }
  const int d = r.max_degree();
  Triangulation t;
  t.path = p;
  for (const auto& [key, coef] : r.terms) {
    const auto& [m, beta] = key;
    if (m.degree() + beta != d) {
      throw std::invalid_argument("term " + m.str() +
                                  " breaks the codimension grading");
    }
    Simplex s = term_to_simplex(m, beta, p);
    if (beta == 0) {
      t.facets.push_back(std::move(s));
    } else {
      t.lower_faces.push_back(std::move(s));
    }
  }
  std::sort(t.facets.begin(), t.facets.end());
  std::sort(t.lower_faces.begin(), t.lower_faces.end());
  for (int v : p.V) t.cone_points.emplace_back(v, v);
  t.dual_edges = dual_graph(t.facets);
  return t;
}

std::vector<std::pair<int, int>> dual_graph(const std::vector<Simplex>& facets) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t f1 = 0; f1 < facets.size(); ++f1) {
    for (std::size_t f2 = f1 + 1; f2 < facets.size(); ++f2) {
      std::vector<Generator> diff;
      std::set_symmetric_difference(facets[f1].mono.gens.begin(), facets[f1].mono.gens.end(),
                                    facets[f2].mono.gens.begin(), facets[f2].mono.gens.end(),
                                    std::back_inserter(diff));
      if (diff.size() == 2) {
        edges.emplace_back(static_cast<int>(f1), static_cast<int>(f2));
      }
    }
  }
  return edges;
}

namespace {

// Chart coordinates: indicator of i within I minus its top element, then of
// j within J minus its top element.
std::vector<long long> chart_coords(const std::pair<int, int>& v, const IndexedPath& p) {
  std::vector<long long> x(static_cast<std::size_t>(p.a() + p.b()), 0);
  for (int c = 0; c < p.a(); ++c) {
    if (p.I[static_cast<std::size_t>(c)] == v.first) x[static_cast<std::size_t>(c)] = 1;
  }
  for (int c = 0; c < p.b(); ++c) {
    if (p.J[static_cast<std::size_t>(c)] == v.second) {
      x[static_cast<std::size_t>(p.a() + c)] = 1;
    }
  }
  return x;
}

// Fraction-free determinant; the matrix is clobbered.
long long bareiss_det(std::vector<std::vector<long long>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t r = 0; r < k; ++r) {
    if (m[r][r] == 0) {
      std::size_t swap = r + 1;
      while (swap < k && m[swap][r] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(m[r], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < k; ++i) {
      for (std::size_t j = r + 1; j < k; ++j) {
        m[i][j] = (m[i][j] * m[r][r] - m[i][r] * m[r][j]) / prev;
      }
      m[i][r] = 0;
    }
    prev = m[r][r];
  }
  return sign * m[k - 1][k - 1];
}

std::vector<std::vector<long long>> edge_matrix(const Simplex& s, const IndexedPath& p) {
  const std::size_t d = static_cast<std::size_t>(p.a() + p.b());
  if (s.verts.size() != d + 1) {
    throw std::invalid_argument("facet has " + std::to_string(s.verts.size()) +
                                " vertices; a full-dimensional simplex needs " +
                                std::to_string(d + 1));
  }
  const std::vector<long long> base = chart_coords(s.verts.front(), p);
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    const std::vector<long long> v = chart_coords(s.verts[k], p);
    for (std::size_t c = 0; c < d; ++c) m[k - 1][c] = v[c] - base[c];
  }
  return m;
}

}  // namespace

bool verify_unimodular(const Simplex& s, const IndexedPath& p) {
  std::vector<std::vector<long long>> m = edge_matrix(s, p);
  const long long det = bareiss_det(m);
  if (det == 0) {
    throw DegenerateSimplexError("facet " + s.mono.str() + " has dependent edge vectors");
  }
  return det == 1 || det == -1;
}

namespace {

// Minor determinant of m with row `dr` and column `dc` removed.
long long minor_det(const std::vector<std::vector<long long>>& m, std::size_t dr,
                    std::size_t dc) {
  const std::size_t k = m.size();
  std::vector<std::vector<long long>> sub;
  sub.reserve(k - 1);
  for (std::size_t r = 0; r < k; ++r) {
    if (r == dr) continue;
    std::vector<long long> row;
    row.reserve(k - 1);
    for (std::size_t c = 0; c < k; ++c) {
      if (c == dc) continue;
      row.push_back(m[r][c]);
    }
    sub.push_back(std::move(row));
  }
  if (sub.empty()) return 1;
  return bareiss_det(sub);
}

struct FacetSolver {
  std::vector<long long> base;                 // chart coords of vertex 0
  std::vector<std::vector<long long>> adj;     // adjugate of the column matrix
  long long det = 0;

  // Barycentric numerators of the scaled point zs (= z * scale) against this
  // facet: lambda_k = num[k] / (det * scale) for k >= 1 and the complement
  // for lambda_0.  Returns numerators multiplied by sign(det).
  std::pair<std::vector<long long>, long long> barycentric(
      const std::vector<long long>& zs, long long scale) const {
    const std::size_t d = adj.size();
    std::vector<long long> rhs(d);
    for (std::size_t c = 0; c < d; ++c) rhs[c] = zs[c] - base[c] * scale;
    const long long sgn = det > 0 ? 1 : -1;
    std::vector<long long> num(d, 0);
    long long sum = 0;
    for (std::size_t r = 0; r < d; ++r) {
      long long acc = 0;
      for (std::size_t c = 0; c < d; ++c) acc += adj[r][c] * rhs[c];
      num[r] = sgn * acc;
      sum += num[r];
    }
    const long long rest = (det > 0 ? det : -det) * scale - sum;
    return {std::move(num), rest};
  }
};

FacetSolver make_solver(const Simplex& s, const IndexedPath& p) {
  FacetSolver fs;
  fs.base = chart_coords(s.verts.front(), p);
  const std::vector<std::vector<long long>> rows = edge_matrix(s, p);
  const std::size_t d = rows.size();
  // Column matrix A with A[r][c] = (vertex c+1 - vertex 0)[r].
  std::vector<std::vector<long long>> a(d, std::vector<long long>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r][c] = rows[c][r];
  }
  {
    std::vector<std::vector<long long>> tmp = a;
    fs.det = bareiss_det(tmp);
  }
  if (fs.det == 0) {
    throw DegenerateSimplexError("facet " + s.mono.str() + " has dependent edge vectors");
  }
  fs.adj.assign(d, std::vector<long long>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const long long cof = minor_det(a, c, r);
      fs.adj[r][c] = ((r + c) % 2 == 0) ? cof : -cof;
    }
  }
  return fs;
}

}  // namespace

CoverReport verify_cover(const Triangulation& t, int trials, std::uint64_t seed) {
  const IndexedPath& p = t.path;
  const std::size_t d = static_cast<std::size_t>(p.a() + p.b());
  std::vector<FacetSolver> solvers;
  solvers.reserve(t.facets.size());
  for (const Simplex& s : t.facets) solvers.push_back(make_solver(s, p));

  CoverReport rep;
  rep.trials = trials;
  rep.min_cover = trials > 0 ? std::numeric_limits<int>::max() : 0;
  std::uint64_t state = seeded_state(seed);
  for (int trial = 0; trial < trials; ++trial) {
    // Positive integer weights give a rational interior point of the ambient
    // product of simplices.
    std::vector<long long> wi(p.I.size()), wj(p.J.size());
    long long d1 = 0, d2 = 0;
    for (long long& x : wi) {
      x = static_cast<long long>(rng_below(state, 64)) + 1;
      d1 += x;
    }
    for (long long& x : wj) {
      x = static_cast<long long>(rng_below(state, 64)) + 1;
      d2 += x;
    }
    // Chart coordinates scaled by d1*d2.
    const long long scale = d1 * d2;
    std::vector<long long> zs(d, 0);
    for (int c = 0; c < p.a(); ++c) zs[static_cast<std::size_t>(c)] = wi[static_cast<std::size_t>(c)] * d2;
    for (int c = 0; c < p.b(); ++c) {
      zs[static_cast<std::size_t>(p.a() + c)] = wj[static_cast<std::size_t>(c)] * d1;
    }

    int covered = 0, interior = 0;
    for (const FacetSolver& fs : solvers) {
      const auto [num, rest] = fs.barycentric(zs, scale);
      bool nonneg = rest >= 0, positive = rest > 0;
      for (long long x : num) {
        nonneg = nonneg && x >= 0;
        positive = positive && x > 0;
      }
      if (nonneg) ++covered;
      if (positive) ++interior;
    }
    rep.min_cover = std::min(rep.min_cover, covered);
    rep.max_interior = std::max(rep.max_interior, interior);
    if (covered < 1 || interior > 1) ++rep.violations;
  }
  rep.ok = rep.violations == 0;
  return rep;
}

std::string CoverReport::text() const {
  return "cover: trials=" + std::to_string(trials) + " min_cover=" + std::to_string(min_cover) +
         " max_interior=" + std::to_string(max_interior) +
         " violations=" + std::to_string(violations) + (ok ? " ok" : " FAIL");
}

CellVolumeReport verify_cell_volumes(const IndexedPath& p) {
  CellVolumeReport rep;
  for (int i = 1; i <= p.w; ++i) {
    const Monomial m = monomial_of_graph(cell_graph(p, i));
    const BetaPoly red = reduce_to_normal_form(BetaPoly::monomial(m),
                                               rho_len_order(p.n), /*simple=*/true);
    long long count = 0;
    for (const auto& [key, coef] : red.terms) count += static_cast<long long>(coef);
    rep.facet_counts.push_back(count);
    rep.expected.push_back(nu_catalan(strip(cyclic_shift(p, i))));
  }
  rep.total = std::accumulate(rep.facet_counts.begin(), rep.facet_counts.end(), 0LL);
  rep.expected_total = binomial(p.a() + p.b(), p.a());
  rep.ok = rep.facet_counts == rep.expected && rep.total == rep.expected_total;
  return rep;
}

std::string CellVolumeReport::text() const {
  std::string s = "cell volumes:";
  for (std::size_t k = 0; k < facet_counts.size(); ++k) {
    s += " " + std::to_string(facet_counts[k]) + "/" + std::to_string(expected[k]);
  }
  s += " total " + std::to_string(total) + "/" + std::to_string(expected_total);
  s += ok ? " ok" : " FAIL";
  return s;
}

SubdivisionComplex simplex_subdivision(const IndexedPath& p) {
  SubdivisionComplex sc;
  sc.path = p;
  sc.graph = partial_augment(bidirectional_nu_graph(p), p);
  sc.routes = enumerate_routes(sc.graph);
  for (int l = 1; l < p.w; ++l) {
    const Edge want{p.V[static_cast<std::size_t>(l) - 1], p.V[static_cast<std::size_t>(l)],
                    Orientation::Bidirectional, 0};
    const auto it = std::find(sc.graph.edges.begin(), sc.graph.edges.end(), want);
    if (it == sc.graph.edges.end()) {
      throw std::logic_error("spine edge missing from the bidirectional graph");
    }
    sc.spine_edge_ids.push_back(static_cast<int>(it - sc.graph.edges.begin()));
  }

  // Per-route spine signature: +1 forward, -1 backward, 0 unused.
  const std::size_t nr = sc.routes.size();
  std::vector<std::vector<int>> spine_sign(nr, std::vector<int>(sc.spine_edge_ids.size(), 0));
  std::vector<bool> any_backward(nr, false);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t k = 0; k < sc.routes[r].edge_ids.size(); ++k) {
      if (sc.routes[r].signs[k] < 0) any_backward[r] = true;
      for (std::size_t l = 0; l < sc.spine_edge_ids.size(); ++l) {
        if (sc.routes[r].edge_ids[k] == sc.spine_edge_ids[l]) {
          spine_sign[r][l] = sc.routes[r].signs[k];
        }
      }
    }
  }

  sc.cell_route_ids.assign(static_cast<std::size_t>(p.w), {});
  for (std::size_t r = 0; r < nr; ++r) {
    for (int i = 1; i <= p.w; ++i) {
      bool in_cell;
      if (i == p.w) {
        in_cell = !any_backward[r];
      } else {
        const int s = spine_sign[r][static_cast<std::size_t>(i) - 1];
        in_cell = s != 1 && (!any_backward[r] || s == -1);
      }
      if (in_cell) sc.cell_route_ids[static_cast<std::size_t>(i) - 1].push_back(static_cast<int>(r));
    }
  }

  // Vertex sets of all nonempty intersections.
  sc.face_vertices.assign(std::size_t{1} << p.w, {});
  std::vector<std::set<std::pair<int, int>>> cell_verts(static_cast<std::size_t>(p.w));
  for (int i = 0; i < p.w; ++i) {
    for (int r : sc.cell_route_ids[static_cast<std::size_t>(i)]) {
      const Route& rt = sc.routes[static_cast<std::size_t>(r)];
      cell_verts[static_cast<std::size_t>(i)].insert({rt.source_label, rt.sink_label});
    }
  }
  for (unsigned mask = 1; mask < (1u << p.w); ++mask) {
    std::set<std::pair<int, int>> acc;
    bool first = true;
    for (int i = 0; i < p.w; ++i) {
      if (!(mask >> i & 1)) continue;
      if (first) {
        acc = cell_verts[static_cast<std::size_t>(i)];
        first = false;
      } else {
        std::set<std::pair<int, int>> keep;
        for (const auto& v : acc) {
          if (cell_verts[static_cast<std::size_t>(i)].count(v)) keep.insert(v);
        }
        acc = std::move(keep);
      }
    }
    sc.face_vertices[mask].assign(acc.begin(), acc.end());
  }

  // Separating hyperplanes: cells i < j are split by the spine coordinate of
  // e_i (minus that of e_j when j is not the last cell).
  sc.hyperplanes_certified = true;
  for (int i = 1; i <= p.w && sc.hyperplanes_certified; ++i) {
    for (int j = i + 1; j <= p.w && sc.hyperplanes_certified; ++j) {
      auto value = [&](std::size_t r) {
        int f = spine_sign[r][static_cast<std::size_t>(i) - 1];
        if (j != p.w) f -= spine_sign[r][static_cast<std::size_t>(j) - 1];
        return f;
      };
      for (int r : sc.cell_route_ids[static_cast<std::size_t>(i) - 1]) {
        if (value(static_cast<std::size_t>(r)) > 0) sc.hyperplanes_certified = false;
      }
      for (int r : sc.cell_route_ids[static_cast<std::size_t>(j) - 1]) {
        if (value(static_cast<std::size_t>(r)) < 0) sc.hyperplanes_certified = false;
      }
    }
  }
  return sc;
}

std::vector<std::pair<int, int>> face_vertices_via_graphs(const IndexedPath& p,
                                                          const std::vector<int>& S) {
  const MixedGraph g = partial_augment(intersect_cell_graphs(p, S), p);
  std::set<std::pair<int, int>> verts;
  for (const Route& r : enumerate_routes(g)) {
    verts.insert({r.source_label, r.sink_label});
  }
  return std::vector<std::pair<int, int>>(verts.begin(), verts.end());
}

std::string Triangulation::to_json() const {
  nlohmann::ordered_json j;
  j["path"] = strip(path).str();
  j["facets"] = nlohmann::ordered_json::array();
  for (const Simplex& s : facets) {
    nlohmann::ordered_json jf;
    jf["mono"] = nlohmann::ordered_json::array();
    for (const Generator& g : s.mono.gens) jf["mono"].push_back({g.i, g.j});
    jf["vertices"] = nlohmann::ordered_json::array();
    for (const auto& [i, jj] : s.verts) jf["vertices"].push_back({i, jj});
    j["facets"].push_back(jf);
  }
  j["cone_points"] = nlohmann::ordered_json::array();
  for (const auto& [i, jj] : cone_points) j["cone_points"].push_back({i, jj});
  j["dual_edges"] = nlohmann::ordered_json::array();
  for (const auto& [f1, f2] : dual_edges) j["dual_edges"].push_back({f1, f2});
  return j.dump();
}

}  // namespace nusubdiv
