#include <benchmark/benchmark.h>

#include <string>

#include "nusubdiv/algebra.hpp"
#include "nusubdiv/flow.hpp"
#include "nusubdiv/graph.hpp"
#include "nusubdiv/path.hpp"
#include "nusubdiv/tamari.hpp"
#include "nusubdiv/triangulate.hpp"

namespace {

using namespace nusubdiv;

// The (EN)^k staircase; its subdivision has binomial(2k, k) facets.
IndexedPath staircase(int k) {
  std::string word;
  for (int i = 0; i < k; ++i) word += "EN";
  return index_path(LatticePath::parse(word));
}

void BM_SimpleReduction(benchmark::State& state) {
  const IndexedPath p = staircase(static_cast<int>(state.range(0)));
  const BetaPoly base = specialize_beta_zero(build_p_nu(p));
  const ReductionOrder order = rho_len_order(p.n);
  for (auto _ : state) {
    BetaPoly reduced = reduce_to_normal_form(base, order, true);
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_SimpleReduction)->DenseRange(1, 4);

void BM_FullReduction(benchmark::State& state) {
  const IndexedPath p = staircase(static_cast<int>(state.range(0)));
  const BetaPoly base = build_p_nu(p);
  const ReductionOrder order = rho_len_order(p.n);
  for (auto _ : state) {
    BetaPoly reduced = reduce_to_normal_form(base, order, false);
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_FullReduction)->DenseRange(1, 4);

void BM_RandomOrderReduction(benchmark::State& state) {
  const IndexedPath p = staircase(static_cast<int>(state.range(0)));
  const BetaPoly base = build_p_nu(p);
  for (auto _ : state) {
    BetaPoly reduced = reduce_to_normal_form(base, random_order(42), false);
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_RandomOrderReduction)->DenseRange(1, 4);

void BM_RouteEnumeration(benchmark::State& state) {
  const IndexedPath p = staircase(static_cast<int>(state.range(0)));
  const MixedGraph g = partial_augment(bidirectional_nu_graph(p), p);
  for (auto _ : state) {
    auto routes = enumerate_routes(g);
    benchmark::DoNotOptimize(routes);
  }
}
BENCHMARK(BM_RouteEnumeration)->DenseRange(1, 6);

void BM_CyclicTreeEnumeration(benchmark::State& state) {
  const IndexedPath p = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto trees = enumerate_cyclic_ij_trees(p);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_CyclicTreeEnumeration)->DenseRange(1, 5);

void BM_CoverProbes(benchmark::State& state) {
  const IndexedPath p = staircase(static_cast<int>(state.range(0)));
  const BetaPoly reduced =
      reduce_to_normal_form(build_p_nu(p), rho_len_order(p.n), false);
  const Triangulation tri = triangulation_from_reduced(reduced, p);
  for (auto _ : state) {
    CoverReport rep = verify_cover(tri, 100, 42);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_CoverProbes)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
