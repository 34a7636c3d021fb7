#include "nusubdiv/algebra.hpp"

#include <gtest/gtest.h>

#include <set>

#include "nusubdiv/errors.hpp"
#include "nusubdiv/graph.hpp"
#include "nusubdiv/path.hpp"

using namespace nusubdiv;

namespace {

IndexedPath indexed(const std::string& word) {
  return index_path(LatticePath::parse(word));
}

Monomial mono(std::vector<std::pair<int, int>> pairs) {
  std::vector<Generator> gens;
  for (auto [i, j] : pairs) gens.emplace_back(i, j);
  return Monomial::of(std::move(gens));
}

// The starting polynomial of the rewriting: one term per cell of the path.
BetaPoly cell_monomials(const IndexedPath& p) {
  BetaPoly out;
  for (int i = 1; i <= p.w; ++i) out.add(monomial_of_graph(cell_graph(p, i)), 0, 1);
  return out;
}

}  // namespace

TEST(Algebra, GeneratorBasics) {
  EXPECT_EQ(Generator(1, 3).str(), "x13");
  EXPECT_EQ(Generator(10, 2).str(), "x10_2");
  EXPECT_EQ(Generator(3, 12).str(), "x3_12");
  EXPECT_THROW(Generator(1, 1), std::invalid_argument);
  EXPECT_THROW(Generator(0, 2), std::invalid_argument);
  EXPECT_THROW(Generator(2, -1), std::invalid_argument);
}

TEST(Algebra, MonomialBasics) {
  const Monomial m = mono({{3, 4}, {1, 3}, {2, 3}});
  EXPECT_EQ(m.str(), "x13*x23*x34");
  EXPECT_EQ(m.degree(), 3);
  EXPECT_TRUE(m.contains(Generator(2, 3)));
  EXPECT_FALSE(m.contains(Generator(3, 2)));
  EXPECT_EQ(m.without(Generator(2, 3)).str(), "x13*x34");
  EXPECT_EQ(m.with(Generator(4, 1)).str(), "x13*x23*x34*x41");
  EXPECT_THROW(m.with(Generator(1, 3)), DuplicateGeneratorError);
  EXPECT_THROW(mono({{1, 3}, {1, 3}}), DuplicateGeneratorError);
  EXPECT_EQ(Monomial{}.str(), "1");
}

TEST(Algebra, MonomialOfGraph) {
  const IndexedPath p = indexed("NEENE");
  EXPECT_EQ(monomial_of_graph(nu_graph(p)).str(), "x13*x23*x34");
  // The backward edge (1, 4) of the first cell reads as x41.
  EXPECT_EQ(monomial_of_graph(cell_graph(p, 1)).str(), "x23*x34*x41");
  EXPECT_EQ(monomial_of_graph(cell_graph(p, 2)).str(), "x13*x23*x41");
  EXPECT_THROW(monomial_of_graph(bidirectional_nu_graph(p)), std::invalid_argument);
}

TEST(Algebra, ReducibleTriples) {
  EXPECT_EQ(reducible_triples(mono({{1, 3}, {2, 3}, {3, 4}})),
            (std::vector<Triple>{{1, 3, 4}, {2, 3, 4}}));
  // x21*x12 chains both ways but never to a loop generator.
  EXPECT_EQ(reducible_triples(mono({{1, 2}, {2, 1}})), std::vector<Triple>{});
  EXPECT_EQ(reducible_triples(mono({{1, 2}, {2, 3}, {3, 1}})),
            (std::vector<Triple>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
}

TEST(Algebra, TwoStepRewriting) {
  BetaPoly p = BetaPoly::monomial(mono({{1, 2}, {2, 4}, {5, 2}}));
  p = reduce_at(p, Triple{1, 2, 4}, /*simple=*/false);
  EXPECT_EQ(p.str(), "x12*x14*x52 + x14*x24*x52 + x14*x52*beta");
  p = reduce_at(p, Triple{5, 2, 4}, /*simple=*/false);
  EXPECT_EQ(p.str(),
            "x12*x14*x52 + x14*x24*x54 + x14*x52*x54 + x14*x52*beta + x14*x54*beta");
  EXPECT_TRUE(p.is_reduced());
}

TEST(Algebra, ReduceAtErrors) {
  const BetaPoly p = BetaPoly::monomial(mono({{1, 2}, {2, 4}, {5, 2}}));
  EXPECT_THROW(reduce_at(p, Triple{2, 4, 1}, false), std::invalid_argument);
  // Rewriting x12*x23 inside x12*x23*x13 would square x13.
  const BetaPoly q = BetaPoly::monomial(mono({{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_THROW(reduce_at(q, Triple{1, 2, 3}, false), DuplicateGeneratorError);
}

TEST(Algebra, SimpleReductionTraceOfExample) {
  const IndexedPath p = indexed("NEENE");
  ReductionLog log;
  const BetaPoly r =
      reduce_to_normal_form(cell_monomials(p), rho_len_order(p.n), /*simple=*/true, &log);
  std::vector<Triple> steps;
  for (const StepRecord& s : log.steps) {
    EXPECT_TRUE(s.simple);
    steps.push_back(s.triple);
  }
  EXPECT_EQ(steps, (std::vector<Triple>{
                       {4, 1, 3}, {1, 3, 4}, {2, 3, 4}, {2, 4, 1}, {3, 4, 1}}));
  EXPECT_TRUE(r.is_reduced());
  EXPECT_EQ(r.top_monomials(),
            (std::vector<Monomial>{
                mono({{1, 3}, {1, 4}, {2, 3}}), mono({{1, 3}, {2, 3}, {4, 3}}),
                mono({{1, 4}, {2, 3}, {2, 4}}), mono({{1, 4}, {2, 4}, {3, 4}}),
                mono({{2, 1}, {2, 3}, {2, 4}}), mono({{2, 1}, {2, 3}, {4, 1}}),
                mono({{2, 1}, {2, 4}, {3, 4}}), mono({{2, 1}, {3, 1}, {3, 4}}),
                mono({{2, 1}, {3, 1}, {4, 1}}), mono({{2, 3}, {4, 1}, {4, 3}})}));
  for (const auto& [key, coef] : r.terms) {
    EXPECT_EQ(coef, 1);
    EXPECT_EQ(key.second, 0);
    EXPECT_EQ(key.first.degree(), 3);
  }
  EXPECT_EQ(log.to_json(),
            "{\"triple\":[4,1,3],\"rule\":\"simple\"}\n"
            "{\"triple\":[1,3,4],\"rule\":\"simple\"}\n"
            "{\"triple\":[2,3,4],\"rule\":\"simple\"}\n"
            "{\"triple\":[2,4,1],\"rule\":\"simple\"}\n"
            "{\"triple\":[3,4,1],\"rule\":\"simple\"}\n");
}

TEST(Algebra, FullReductionGradesByCodimension) {
  const IndexedPath p = indexed("NEENE");
  const BetaPoly r =
      reduce_to_normal_form(cell_monomials(p), rho_len_order(p.n), /*simple=*/false);
  EXPECT_TRUE(r.is_reduced());
  EXPECT_EQ(r.max_degree(), 3);
  std::map<int, BigInt> profile = r.degree_profile();
  EXPECT_EQ(profile[3], 10);
  for (const auto& [key, coef] : r.terms) {
    EXPECT_EQ(coef, 1);
    EXPECT_EQ(key.second, 3 - key.first.degree());
  }
  // The beta-free part coincides with the simple reduction.
  const BetaPoly s =
      reduce_to_normal_form(cell_monomials(p), rho_len_order(p.n), /*simple=*/true);
  EXPECT_EQ(specialize_beta_zero(r), s);
}

TEST(Algebra, EdgeLengths) {
  EXPECT_EQ(edge_length(1, 3, 4), 2);
  EXPECT_EQ(edge_length(3, 1, 4), 2);
  EXPECT_EQ(edge_length(1, 2, 4), 1);
  EXPECT_EQ(edge_length(1, 2, 4, LengthVariant::Complement), 3);
  EXPECT_EQ(edge_length(4, 1, 4), 1);
  EXPECT_EQ(edge_length(4, 1, 4, LengthVariant::Complement), 3);
  EXPECT_THROW(edge_length(1, 1, 4), std::invalid_argument);
  EXPECT_THROW(edge_length(0, 2, 4), std::invalid_argument);
  EXPECT_THROW(edge_length(1, 5, 4), std::invalid_argument);
}

TEST(Algebra, LengthOrderPrefersSmallMiddleThenLongArrows) {
  const IndexedPath p = indexed("NEENE");
  EXPECT_EQ(rho_len_next(cell_monomials(p), p.n), (Triple{4, 1, 3}));

  BetaPoly two_in;
  two_in.add(mono({{1, 3}, {3, 4}}), 0, 1);
  two_in.add(mono({{2, 3}, {3, 4}}), 0, 1);
  EXPECT_EQ(rho_len_next(two_in, 4), (Triple{1, 3, 4}));
  EXPECT_EQ(rho_len_next(two_in, 4, LengthVariant::Complement), (Triple{2, 3, 4}));

  BetaPoly two_out;
  two_out.add(mono({{1, 2}, {2, 3}}), 0, 1);
  two_out.add(mono({{1, 2}, {2, 4}}), 0, 1);
  EXPECT_EQ(rho_len_next(two_out, 4), (Triple{1, 2, 4}));

  const BetaPoly reduced = BetaPoly::monomial(mono({{1, 3}, {2, 3}}));
  EXPECT_THROW(rho_len_next(reduced, 4), std::invalid_argument);
}

TEST(Algebra, LexOrderPicksTheSmallestTriple) {
  const IndexedPath p = indexed("NEENE");
  const ReductionOrder ord = lex_order();
  EXPECT_EQ(ord.name, "lex");
  EXPECT_EQ(ord.next(cell_monomials(p)), std::optional<Triple>(Triple{1, 3, 4}));
  EXPECT_EQ(ord.next(BetaPoly::monomial(mono({{1, 3}, {2, 3}}))), std::nullopt);
}

TEST(Algebra, RandomOrderIsDeterministicPerSeed) {
  const IndexedPath p = indexed("NEENE");
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    const BetaPoly a =
        reduce_to_normal_form(cell_monomials(p), random_order(seed), true);
    const BetaPoly b =
        reduce_to_normal_form(cell_monomials(p), random_order(seed), true);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.is_reduced());
    EXPECT_EQ(a.degree_profile()[3], 10);
    for (const auto& [key, coef] : a.terms) EXPECT_EQ(coef, 1);
  }
}

TEST(Algebra, LongestFirstReductionsAgree) {
  for (const char* word : {"NEENE", "ENEN", "EENN", "NNE", "ENNEE"}) {
    const IndexedPath p = indexed(word);
    const BetaPoly reference =
        reduce_to_normal_form(cell_monomials(p), rho_len_order(p.n), false);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const BetaPoly other = reduce_to_normal_form(
          cell_monomials(p), longest_first_order(p.n, seed), false);
      EXPECT_EQ(other, reference) << word << " seed " << seed;
    }
  }
}

TEST(Algebra, StepBoundTrips) {
  const IndexedPath p = indexed("NEENE");
  EXPECT_THROW(
      reduce_to_normal_form(cell_monomials(p), rho_len_order(p.n), false, nullptr, 2),
      ResourceLimitError);
}

TEST(Algebra, ReductionTreeMatchesTheDegreeProfile) {
  const Monomial m = mono({{1, 3}, {2, 3}, {3, 4}});
  const ReductionTree tree = reduction_tree(m, rho_len_order(4));
  EXPECT_EQ(tree.nodes[0].m, m);
  EXPECT_EQ(tree.nodes[0].beta, 0);
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    const auto& node = tree.nodes[k];
    EXPECT_TRUE(node.children.empty() || node.children.size() == 3);
    for (int c : node.children) {
      EXPECT_EQ(tree.nodes[static_cast<std::size_t>(c)].parent, static_cast<int>(k));
    }
  }
  const BetaPoly r =
      reduce_to_normal_form(BetaPoly::monomial(m), rho_len_order(4), false);
  std::map<int, long long> profile;
  for (const auto& [deg, mass] : r.degree_profile()) {
    profile[deg] = static_cast<long long>(mass);
  }
  EXPECT_EQ(tree.leaf_count_by_degree(), profile);
  for (int leaf : tree.leaves()) {
    const auto& node = tree.nodes[static_cast<std::size_t>(leaf)];
    EXPECT_TRUE(reducible_triples(node.m).empty());
    EXPECT_EQ(node.beta, 3 - node.m.degree());
  }
}

TEST(Algebra, SeededGeneratorIsPortable) {
  std::uint64_t s1 = seeded_state(42);
  std::uint64_t s2 = seeded_state(42);
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t bound = 1 + static_cast<std::uint64_t>(k);
    const std::uint64_t a = rng_below(s1, bound);
    EXPECT_EQ(a, rng_below(s2, bound));
    EXPECT_LT(a, bound);
  }
  std::uint64_t s3 = seeded_state(7);
  EXPECT_EQ(rng_below(s3, 1), 0u);
}

TEST(Algebra, PolynomialBookkeeping) {
  BetaPoly p;
  const Monomial m = mono({{1, 2}});
  p.add(m, 0, 1);
  p.add(m, 0, -1);
  EXPECT_TRUE(p.terms.empty());
  EXPECT_EQ(p.str(), "0");
  p.add(m, 1, 2);
  p.add(mono({{1, 2}, {2, 3}}), 0, 1);
  EXPECT_EQ(p.str(), "x12*x23 + 2*x12*beta");
  EXPECT_EQ(p.max_degree(), 2);
  EXPECT_EQ(p.top_monomials(), std::vector<Monomial>{mono({{1, 2}, {2, 3}})});
  EXPECT_FALSE(p.is_reduced());
  EXPECT_EQ(p.to_json(),
            "[{\"mono\":[[1,2],[2,3]],\"beta\":0,\"coef\":1},"
            "{\"mono\":[[1,2]],\"beta\":1,\"coef\":2}]");
  EXPECT_EQ(specialize_beta_zero(p).str(), "x12*x23");
}
