#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nusubdiv/flow.hpp"
#include "nusubdiv/graph.hpp"

namespace nusubdiv {

// The generator x_ij for an ordered pair i != j of positive indices.
struct Generator {
  int i = 0;
  int j = 0;

  Generator() = default;
  Generator(int i_, int j_);

  std::string str() const;  // "x13", or "x13_7" past one digit
  auto operator<=>(const Generator&) const = default;
};

// A square-free product of generators, kept sorted.
struct Monomial {
  std::vector<Generator> gens;

  static Monomial of(std::vector<Generator> gens);  // sorts; rejects repeats
  int degree() const { return static_cast<int>(gens.size()); }
  bool contains(const Generator& g) const;
  Monomial without(const Generator& g) const;
  Monomial with(const Generator& g) const;  // throws DuplicateGeneratorError on repeat
  std::string str() const;                  // "x13*x23*x34"; the unit monomial is "1"

  auto operator<=>(const Monomial&) const = default;
};

// Reads a forward/backward graph off as a monomial: a forward edge (i, j)
// becomes x_ij, a backward edge becomes x_ji.  Bidirectional or repeated
// edges are rejected.
Monomial monomial_of_graph(const MixedGraph& g);

// A factor pair x_ij * x_jk inside a monomial, identified by (i, j, k).
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;
  auto operator<=>(const Triple&) const = default;
};

std::vector<Triple> reducible_triples(const Monomial& m);

// A polynomial in the generators and a central parameter beta: each term is
// a square-free monomial times a power of beta with an integer coefficient.
struct BetaPoly {
  std::map<std::pair<Monomial, int>, BigInt> terms;

  static BetaPoly monomial(const Monomial& m);
  void add(const Monomial& m, int beta, const BigInt& coef);
  bool is_reduced() const;
  int max_degree() const;
  // Total coefficient mass per monomial degree.
  std::map<int, BigInt> degree_profile() const;
  // Monomials of maximal degree, sorted.
  std::vector<Monomial> top_monomials() const;
  std::string str() const;
  std::string to_json() const;

  auto operator<=>(const BetaPoly&) const = default;
};

// Keeps only the beta-free terms.
BetaPoly specialize_beta_zero(const BetaPoly& p);

// Applies x_ij x_jk -> x_ik x_ij + x_jk x_ik + beta x_ik to every term of p
// that contains the pair named by t; other terms are copied.  With
// simple = true the beta branch is dropped.  Throws DuplicateGeneratorError
// when a replacement would square a generator, and std::invalid_argument when
// no term contains the pair.
BetaPoly reduce_at(const BetaPoly& p, const Triple& t, bool simple);

enum class LengthVariant { Span, Complement };

// Cyclic length of the arrow i -> j on n letters: (j - i) mod n for Span,
// (i - j) mod n for Complement.
int edge_length(int i, int j, int n, LengthVariant v = LengthVariant::Span);

// The pair the length-based strategy reduces next: smallest middle index j,
// then longest incoming generator, then longest outgoing one.  Throws
// std::invalid_argument when p is already reduced.
Triple rho_len_next(const BetaPoly& p, int n, LengthVariant v = LengthVariant::Span);

// A reduction order: a rule choosing the next pair to rewrite.
struct ReductionOrder {
  std::string name;
  std::function<std::optional<Triple>(const BetaPoly&)> next;
};

ReductionOrder rho_len_order(int n, LengthVariant v = LengthVariant::Span);
ReductionOrder lex_order();
// Uniform choice among the reducible pairs, driven by a seeded generator.
ReductionOrder random_order(std::uint64_t seed);
// Uniform choice among the pairs that are longest at their middle vertex in
// every term containing them.
ReductionOrder longest_first_order(int n, std::uint64_t seed,
                                   LengthVariant v = LengthVariant::Span);

struct StepRecord {
  Triple triple;
  bool simple = false;
  auto operator<=>(const StepRecord&) const = default;
};

struct ReductionLog {
  std::vector<StepRecord> steps;
  std::string to_json() const;  // one JSON object per line
};

inline constexpr std::size_t kDefaultStepBound = 1u << 20;

// Rewrites until no reducible pair remains, consulting `order` for the next
// pair.  Throws ResourceLimitError when step_bound rewrites are exceeded.
BetaPoly reduce_to_normal_form(BetaPoly p, const ReductionOrder& order, bool simple,
                               ReductionLog* log = nullptr,
                               std::size_t step_bound = kDefaultStepBound);

// The branching structure of a reduction of a single starting monomial: each
// rewrite splits a leaf containing the pair into its replacement monomials.
struct ReductionTree {
  struct Node {
    Monomial m;
    int beta = 0;          // beta exponent accumulated from the root
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  std::vector<int> leaves() const;
  std::map<int, long long> leaf_count_by_degree() const;
};

ReductionTree reduction_tree(const Monomial& m, const ReductionOrder& order,
                             std::size_t step_bound = kDefaultStepBound);

// Portable uniform integer in [0, bound) by rejection sampling.
std::uint64_t rng_below(std::uint64_t& state, std::uint64_t bound);
std::uint64_t seeded_state(std::uint64_t seed);

}  // namespace nusubdiv
