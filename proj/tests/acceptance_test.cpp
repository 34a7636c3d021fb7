// End-to-end checks of the library's headline guarantees, one per test.
// Each test prints a single pass/fail line so the suite doubles as a report.

#include <gtest/gtest.h>

#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nusubdiv/algebra.hpp"
#include "nusubdiv/flow.hpp"
#include "nusubdiv/graph.hpp"
#include "nusubdiv/path.hpp"
#include "nusubdiv/tamari.hpp"
#include "nusubdiv/triangulate.hpp"

using namespace nusubdiv;

namespace {

// Prints the verdict for one criterion when the test body finishes, whether
// it ended normally or through a fatal assertion.
class Criterion {
 public:
  Criterion(int number, std::string what) : number_(number), what_(std::move(what)) {}
  ~Criterion() {
    const bool ok = !testing::Test::HasFailure();
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number_,
                what_.c_str());
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string what_;
};

IndexedPath indexed(const std::string& word) {
  return index_path(LatticePath::parse(word));
}

std::vector<LatticePath> all_words(int steps) {
  std::vector<LatticePath> out;
  for (int len = 0; len <= steps; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      LatticePath p;
      for (int i = 0; i < len; ++i) {
        p.steps.push_back((mask >> i) & 1 ? Step::N : Step::E);
      }
      out.push_back(p);
    }
  }
  return out;
}

BetaPoly reduce_full(const IndexedPath& p) {
  return reduce_to_normal_form(build_p_nu(p), rho_len_order(p.n), false);
}

}  // namespace

TEST(Acceptance, WorkedExampleReproduction) {
  Criterion c(1, "worked example polynomial and its reduced form");
  const IndexedPath p = indexed("NEENE");

  EXPECT_EQ(build_p_nu(p).str(),
            "x13*x23*x34 + x13*x23*x41 + x23*x34*x41 + x13*x23*beta + "
            "x23*x34*beta + x23*x41*beta + x23*beta^2");

  const BetaPoly reduced = reduce_to_normal_form(
      specialize_beta_zero(build_p_nu(p)), rho_len_order(p.n), true);
  EXPECT_TRUE(reduced.is_reduced());
  EXPECT_EQ(reduced.top_monomials().size(), 10u);
  EXPECT_EQ(reduced.str(),
            "x13*x14*x23 + x13*x23*x43 + x14*x23*x24 + x14*x24*x34 + "
            "x21*x23*x24 + x21*x23*x41 + x21*x24*x34 + x21*x31*x34 + "
            "x21*x31*x41 + x23*x41*x43");
}

TEST(Acceptance, TwoStepRewritingExample) {
  Criterion c(2, "two-step rewriting of x12*x24*x52");
  const BetaPoly start =
      BetaPoly::monomial(Monomial::of({{1, 2}, {2, 4}, {5, 2}}));

  const BetaPoly after_first = reduce_at(start, Triple{1, 2, 4}, false);
  EXPECT_EQ(after_first.str(),
            "x12*x14*x52 + x14*x24*x52 + x14*x52*beta");

  const BetaPoly after_second = reduce_at(after_first, Triple{5, 2, 4}, false);
  EXPECT_TRUE(after_second.is_reduced());
  EXPECT_EQ(after_second.str(),
            "x12*x14*x52 + x14*x24*x54 + x14*x52*x54 + x14*x52*beta + "
            "x14*x54*beta");
}

TEST(Acceptance, FacetCountsMatchPathCounts) {
  Criterion c(3, "facet counts equal binomial(a+b, a) for every word up to 8 "
                 "steps, under the length order and 5 seeded random orders, "
                 "and match the per-cell path counts");
  for (const LatticePath& nu : all_words(8)) {
    const IndexedPath p = index_path(nu);
    const long long expected = binomial(nu.size(), nu.east());
    const BetaPoly base = specialize_beta_zero(build_p_nu(p));

    const BetaPoly by_length =
        reduce_to_normal_form(base, rho_len_order(p.n), true);
    ASSERT_EQ(static_cast<long long>(by_length.top_monomials().size()),
              expected)
        << nu.str();

    for (std::uint64_t seed = 101; seed <= 105; ++seed) {
      const BetaPoly by_random =
          reduce_to_normal_form(base, random_order(seed), true);
      ASSERT_EQ(static_cast<long long>(by_random.top_monomials().size()),
                expected)
          << nu.str() << " seed " << seed;
    }

    long long by_cells = 0;
    for (int k = 1; k <= p.w; ++k) {
      by_cells += nu_catalan(strip(cyclic_shift(p, k)));
    }
    ASSERT_EQ(by_cells, expected) << nu.str();
  }
}

TEST(Acceptance, DegreeProfilesAreOrderIndependent) {
  Criterion c(4, "degree profiles of the reduced tree monomial agree across "
                 "10 seeded orders for every word up to 7 steps");
  for (const LatticePath& nu : all_words(7)) {
    const IndexedPath p = index_path(nu);
    const BetaPoly start =
        BetaPoly::monomial(monomial_of_graph(nu_graph(p)));
    const auto reference =
        reduce_to_normal_form(start, rho_len_order(p.n), false)
            .degree_profile();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto profile =
          reduce_to_normal_form(start, random_order(seed), false)
              .degree_profile();
      ASSERT_EQ(profile, reference) << nu.str() << " seed " << seed;
    }
  }
}

TEST(Acceptance, FacetsRealizeTheNonCrossingTrees) {
  Criterion c(5, "facet arc sets equal the cyclically non-crossing trees and "
                 "the dual graph is the increasing-flip Hasse diagram, for "
                 "every word up to 8 steps");
  for (const LatticePath& nu : all_words(8)) {
    const IndexedPath p = index_path(nu);
    const Triangulation tri = triangulation_from_reduced(reduce_full(p), p);
    const std::vector<IJForest> trees = enumerate_cyclic_ij_trees(p);

    std::set<IJForest> facet_arcs;
    std::vector<IJForest> facet_arc_by_index;
    for (const Simplex& f : tri.facets) {
      facet_arc_by_index.push_back(arcs_of_monomial(f.mono, p));
      facet_arcs.insert(facet_arc_by_index.back());
    }
    ASSERT_EQ(facet_arcs, std::set<IJForest>(trees.begin(), trees.end()))
        << nu.str();

    using TreePair = std::pair<IJForest, IJForest>;
    const auto normalized = [](IJForest x, IJForest y) {
      return x < y ? TreePair{std::move(x), std::move(y)}
                   : TreePair{std::move(y), std::move(x)};
    };
    std::set<TreePair> dual_edges;
    for (const auto& [f, g] : dual_graph(tri.facets)) {
      dual_edges.insert(
          normalized(facet_arc_by_index[f], facet_arc_by_index[g]));
    }
    std::set<TreePair> hasse_edges;
    for (const auto& [lo, hi] : increasing_flip_covers(trees)) {
      hasse_edges.insert(normalized(trees[lo], trees[hi]));
    }
    ASSERT_EQ(dual_edges, hasse_edges) << nu.str();
  }
}

TEST(Acceptance, TriangulationsAreUnimodularAndCoverExactly) {
  Criterion c(6, "every facet passes the exact unimodularity test and 1000 "
                 "seeded rational probes per word up to 8 steps report exact "
                 "coverage with disjoint interiors");
  std::uint64_t seed = 1;
  for (const LatticePath& nu : all_words(8)) {
    const IndexedPath p = index_path(nu);
    const Triangulation tri = triangulation_from_reduced(reduce_full(p), p);
    for (const Simplex& f : tri.facets) {
      ASSERT_TRUE(verify_unimodular(f, p)) << nu.str();
    }
    const CoverReport rep = verify_cover(tri, 1000, seed++);
    ASSERT_TRUE(rep.ok) << nu.str() << ": " << rep.text();
    ASSERT_EQ(rep.violations, 0) << nu.str();
    ASSERT_GE(rep.min_cover, 1) << nu.str();
    ASSERT_LE(rep.max_interior, 1) << nu.str();
  }
}

TEST(Acceptance, CellVertexSetsMatchTheIntersectedGraphs) {
  Criterion c(7, "cell and intersection vertex sets match the routes of the "
                 "intersected graphs, with certified separating hyperplanes, "
                 "for every word up to 8 steps");
  for (const LatticePath& nu : all_words(8)) {
    const IndexedPath p = index_path(nu);
    const SubdivisionComplex sub = simplex_subdivision(p);
    ASSERT_TRUE(sub.hyperplanes_certified) << nu.str();
    for (int mask = 1; mask < (1 << p.w); ++mask) {
      std::vector<int> cells;
      for (int l = 1; l <= p.w; ++l) {
        if (mask & (1 << (l - 1))) cells.push_back(l);
      }
      ASSERT_EQ(sub.face_vertices[mask], face_vertices_via_graphs(p, cells))
          << nu.str() << " mask " << mask;
    }
  }
}

TEST(Acceptance, RouteVerticesOfTheProductPolytope) {
  Criterion c(8, "the augmented bidirectional graph has (a+1)(b+1) routes "
                 "whose signed vectors are conserving, distinct, and never "
                 "three collinear, for every word up to 6 steps");
  for (const LatticePath& nu : all_words(6)) {
    const IndexedPath p = index_path(nu);
    const MixedGraph g = partial_augment(bidirectional_nu_graph(p), p);
    const std::vector<Route> routes = enumerate_routes(g);
    ASSERT_EQ(static_cast<long long>(routes.size()),
              static_cast<long long>(p.a() + 1) * (p.b() + 1))
        << nu.str();

    std::set<std::vector<Rational>> vectors;
    for (const Route& r : routes) {
      const std::vector<Rational> x = signed_vector(r, g);
      ASSERT_TRUE(check_flow(x, g)) << nu.str();
      vectors.insert(x);
    }
    ASSERT_EQ(vectors.size(), routes.size()) << nu.str();
    ASSERT_FALSE(three_points_collinear(polytope_vertices(g))) << nu.str();
  }
}
