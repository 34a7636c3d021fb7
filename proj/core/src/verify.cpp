#include "nusubdiv/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nlohmann/json.hpp"
#include "nusubdiv/algebra.hpp"
#include "nusubdiv/errors.hpp"
#include "nusubdiv/flow.hpp"
#include "nusubdiv/graph.hpp"
#include "nusubdiv/tamari.hpp"
#include "nusubdiv/triangulate.hpp"

namespace nusubdiv {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::text() const {
  std::string s = "verify " + (path.empty() ? std::string("(empty path)") : path) + "\n";
  for (const CheckResult& c : checks) {
    s += std::string(c.pass ? "  [PASS] " : "  [FAIL] ") + c.name;
    if (!c.detail.empty()) s += ": " + c.detail;
    s += "\n";
  }
  s += ok() ? "all checks passed\n" : "some checks FAILED\n";
  return s;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["path"] = path;
  j["ok"] = ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j.dump();
}

namespace {

void check(VerifyReport& rep, const std::string& name, bool pass,
           const std::string& detail = "") {
  rep.checks.push_back(CheckResult{name, pass, pass ? "" : detail});
}

// Tree lists compared as sets of sorted arc lists.
std::set<std::vector<std::pair<int, int>>> tree_set(const std::vector<IJForest>& trees) {
  std::set<std::vector<std::pair<int, int>>> out;
  for (const IJForest& t : trees) {
    std::vector<std::pair<int, int>> arcs;
    for (const Arc& a : t.arcs) arcs.emplace_back(a.i, a.j);
    out.insert(arcs);
  }
  return out;
}

}  // namespace

VerifyReport verify_path(const LatticePath& nu, const VerifyOptions& opt) {
  if (nu.size() > opt.guard) {
    throw ResourceLimitError("verification is guarded at " + std::to_string(opt.guard) +
                             " path steps");
  }
  VerifyReport rep;
  rep.path = nu.str();
  const IndexedPath p = index_path(nu);
  const int a = p.a(), b = p.b();
  const long long expected_facets = binomial(a + b, a);

  // Routes of the bidirectional augmented graph.
  const MixedGraph gb = partial_augment(bidirectional_nu_graph(p), p);
  const std::vector<Route> routes = enumerate_routes(gb);
  check(rep, "route count", static_cast<long long>(routes.size()) ==
                                static_cast<long long>(a + 1) * (b + 1),
        std::to_string(routes.size()) + " routes for (a+1)(b+1)=" +
            std::to_string((a + 1) * (b + 1)));
  {
    bool flows_ok = true;
    for (const Route& r : routes) {
      if (!check_flow(signed_vector(r, gb), gb)) flows_ok = false;
    }
    check(rep, "flow conservation", flows_ok);
    std::vector<std::vector<Rational>> vecs = polytope_vertices(gb);
    std::sort(vecs.begin(), vecs.end());
    const bool distinct = std::adjacent_find(vecs.begin(), vecs.end()) == vecs.end();
    check(rep, "route vectors distinct", distinct);
    check(rep, "no three route vectors collinear", !three_points_collinear(vecs));
  }

  // Subdivision polynomial.
  const BetaPoly pnu = build_p_nu(p);
  {
    bool coef_ok = true;
    for (const auto& [key, coef] : pnu.terms) {
      if (coef != 1) coef_ok = false;
    }
    check(rep, "subdivision polynomial terms",
          static_cast<int>(pnu.terms.size()) == (1 << p.w) - 1 && coef_ok,
          std::to_string(pnu.terms.size()) + " terms for 2^w-1=" +
              std::to_string((1 << p.w) - 1));
  }

  // Reductions under the length order and seeded random orders.
  std::vector<ReductionOrder> orders;
  orders.push_back(rho_len_order(p.n));
  for (int k = 0; k < opt.random_orders; ++k) {
    orders.push_back(random_order(opt.seed + static_cast<std::uint64_t>(k)));
  }
  std::vector<BetaPoly> reductions;
  for (const ReductionOrder& ord : orders) {
    reductions.push_back(reduce_to_normal_form(pnu, ord, /*simple=*/false));
  }
  {
    bool counts_ok = true, coef_ok = true, grading_ok = true;
    for (const BetaPoly& red : reductions) {
      const int d = red.max_degree();
      long long tops = 0;
      for (const auto& [key, coef] : red.terms) {
        if (coef != 1) coef_ok = false;
        if (key.first.degree() + key.second != d) grading_ok = false;
        if (key.first.degree() == d) tops += static_cast<long long>(coef);
      }
      if (tops != expected_facets) counts_ok = false;
    }
    check(rep, "reduced facet count", counts_ok,
          "expected " + std::to_string(expected_facets) + " top monomials");
    check(rep, "reduced coefficients are 1", coef_ok);
    check(rep, "codimension equals beta exponent", grading_ok);
  }

  // Triangulations: unimodular facets that tile the ambient polytope.
  std::vector<Triangulation> triangulations;
  for (const BetaPoly& red : reductions) {
    triangulations.push_back(triangulation_from_reduced(red, p));
  }
  {
    bool uni_ok = true;
    for (const Triangulation& t : triangulations) {
      for (const Simplex& s : t.facets) {
        if (!verify_unimodular(s, p)) uni_ok = false;
      }
    }
    check(rep, "facets unimodular", uni_ok);
    if (opt.check_cover) {
      bool cover_ok = true;
      std::string detail;
      for (const Triangulation& t : triangulations) {
        const CoverReport cr = verify_cover(t, opt.trials, opt.seed);
        if (!cr.ok) {
          cover_ok = false;
          detail = cr.text();
        }
      }
      check(rep, "facets cover the polytope", cover_ok, detail);
    }
  }

  // Cell volumes.
  {
    const CellVolumeReport cv = verify_cell_volumes(p);
    check(rep, "cell facet counts", cv.ok, cv.text());
  }

  // Trees: the reduced facets are exactly the maximal non-crossing arc sets.
  {
    const std::vector<IJForest> trees = enumerate_cyclic_ij_trees(p, opt.guard + 2);
    std::set<std::vector<std::pair<int, int>>> expected_trees = tree_set(trees);
    // Only the length order is expected to reproduce the tree set; other
    // orders give different (equally valid) triangulations.
    const Triangulation& length_tri = triangulations.front();
    bool phi_ok = true;
    {
      std::set<std::vector<std::pair<int, int>>> got;
      for (const Simplex& s : length_tri.facets) {
        const IJForest f = arcs_of_monomial(s.mono, p);
        std::vector<std::pair<int, int>> arcs;
        for (const Arc& arc : f.arcs) arcs.emplace_back(arc.i, arc.j);
        got.insert(arcs);
      }
      if (got != expected_trees) phi_ok = false;
    }
    check(rep, "facets map onto the non-crossing trees", phi_ok,
          std::to_string(trees.size()) + " trees expected");

    bool max_ok = true;
    std::map<std::pair<int, int>, long long> class_sizes;
    try {
      for (const IJForest& t : trees) {
        const Arc m = maximal_arc(t, p);
        ++class_sizes[{m.i, m.j}];
      }
    } catch (const std::invalid_argument&) {
      max_ok = false;
    }
    if (max_ok) {
      std::map<std::pair<int, int>, long long> expected_sizes;
      for (int k = 1; k <= p.w; ++k) {
        const Arc m = peak_arc(p, k);
        expected_sizes[{m.i, m.j}] = nu_catalan(strip(cyclic_shift(p, k)));
      }
      max_ok = class_sizes == expected_sizes;
    }
    check(rep, "maximal arc classes", max_ok);

    // The dual graph of each triangulation matches the flip covers.
    const std::vector<std::pair<int, int>> covers = increasing_flip_covers(trees);
    std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>>
        cover_set;
    auto arcs_of_tree = [&](const IJForest& t) {
      std::vector<std::pair<int, int>> arcs;
      for (const Arc& a2 : t.arcs) arcs.emplace_back(a2.i, a2.j);
      return arcs;
    };
    for (const auto& [s, t2] : covers) {
      auto lo = arcs_of_tree(trees[static_cast<std::size_t>(s)]);
      auto hi = arcs_of_tree(trees[static_cast<std::size_t>(t2)]);
      if (lo > hi) std::swap(lo, hi);
      cover_set.insert({lo, hi});
    }
    bool dual_ok = true;
    {
      std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>>
          dual_set;
      for (const auto& [f1, f2] : length_tri.dual_edges) {
        auto lo = arcs_of_tree(
            arcs_of_monomial(length_tri.facets[static_cast<std::size_t>(f1)].mono, p));
        auto hi = arcs_of_tree(
            arcs_of_monomial(length_tri.facets[static_cast<std::size_t>(f2)].mono, p));
        if (lo > hi) std::swap(lo, hi);
        dual_set.insert({lo, hi});
      }
      if (dual_set != cover_set) dual_ok = false;
    }
    check(rep, "dual graph matches flip covers", dual_ok,
          std::to_string(covers.size()) + " covers expected");
  }

  // Cells of the subdivision against the intersected graphs.
  {
    const SubdivisionComplex sc = simplex_subdivision(p);
    bool faces_ok = true;
    for (unsigned mask = 1; mask < (1u << p.w); ++mask) {
      std::vector<int> S;
      for (int l = 1; l <= p.w; ++l) {
        if (mask >> (l - 1) & 1) S.push_back(l);
      }
      if (sc.face_vertices[mask] != face_vertices_via_graphs(p, S)) faces_ok = false;
    }
    check(rep, "cell vertex sets match graph routes", faces_ok);
    check(rep, "separating hyperplanes", sc.hyperplanes_certified);
    bool cones_ok = true;
    for (unsigned mask = 1; mask < (1u << p.w); ++mask) {
      for (int v : p.V) {
        const auto& fv = sc.face_vertices[mask];
        if (!std::binary_search(fv.begin(), fv.end(), std::make_pair(v, v))) {
          cones_ok = false;
        }
      }
    }
    check(rep, "cone points lie in every cell", cones_ok);
  }

  return rep;
}

std::string SweepReport::text() const {
  std::string s = "sweep up to " + std::to_string(max_steps) + " steps: " +
                  std::to_string(paths) + " paths, " + std::to_string(failures) +
                  " failures\n";
  for (const std::string& f : failed) s += "  " + f + "\n";
  return s;
}

std::string SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_steps"] = max_steps;
  j["paths"] = paths;
  j["failures"] = failures;
  j["failed"] = failed;
  return j.dump();
}

SweepReport sweep_paths(int max_steps, const VerifyOptions& opt) {
  SweepReport rep;
  rep.max_steps = max_steps;
  for (int len = 0; len <= max_steps; ++len) {
    for (long long mask = 0; mask < (1LL << len); ++mask) {
      LatticePath nu;
      for (int s = 0; s < len; ++s) {
        nu.steps.push_back((mask >> s & 1) ? Step::N : Step::E);
      }
      VerifyOptions local = opt;
      local.guard = std::max(opt.guard, len);
      const VerifyReport r = verify_path(nu, local);
      ++rep.paths;
      if (!r.ok()) {
        ++rep.failures;
        for (const CheckResult& c : r.checks) {
          if (!c.pass) rep.failed.push_back(nu.str() + ": " + c.name);
        }
      }
    }
  }
  return rep;
}

}  // namespace nusubdiv
