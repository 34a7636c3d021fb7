#include "nusubdiv/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "nusubdiv/errors.hpp"

namespace nusubdiv {

Generator::Generator(int i_, int j_) : i(i_), j(j_) {
  if (i <= 0 || j <= 0) throw std::invalid_argument("generator indices must be positive");
  if (i == j) throw std::invalid_argument("generator indices must differ");
}

std::string Generator::str() const {
  if (i <= 9 && j <= 9) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

Monomial Monomial::of(std::vector<Generator> gens) {
  std::sort(gens.begin(), gens.end());
  if (std::adjacent_find(gens.begin(), gens.end()) != gens.end()) {
    throw DuplicateGeneratorError("monomial would contain a squared generator");
  }
  Monomial m;
  m.gens = std::move(gens);
  return m;
}

bool Monomial::contains(const Generator& g) const {
  return std::binary_search(gens.begin(), gens.end(), g);
}

Monomial Monomial::without(const Generator& g) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.gens.begin(), m.gens.end(), g);
  if (it == m.gens.end() || *it != g) {
    throw std::logic_error("monomial does not contain " + g.str());
  }
  m.gens.erase(it);
  return m;
}

Monomial Monomial::with(const Generator& g) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.gens.begin(), m.gens.end(), g);
  if (it != m.gens.end() && *it == g) {
    throw DuplicateGeneratorError("reduction would square " + g.str());
  }
  m.gens.insert(it, g);
  return m;
}

std::string Monomial::str() const {
  if (gens.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += "*";
    s += gens[k].str();
  }
  return s;
}

Monomial monomial_of_graph(const MixedGraph& g) {
  std::vector<Generator> gens;
  for (const Edge& e : g.edges) {
    switch (e.dir) {
      case Orientation::Forward:
        gens.emplace_back(e.tail, e.head);
        break;
      case Orientation::Backward:
        gens.emplace_back(e.head, e.tail);
        break;
      case Orientation::Bidirectional:
        throw std::invalid_argument("bidirectional edge has no generator");
    }
  }
  return Monomial::of(std::move(gens));
}

std::vector<Triple> reducible_triples(const Monomial& m) {
  std::vector<Triple> out;
  for (const Generator& u : m.gens) {
    for (const Generator& v : m.gens) {
      if (u.j == v.i && u.i != v.j) out.push_back(Triple{u.i, u.j, v.j});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Triple> poly_triples(const BetaPoly& p) {
  std::set<Triple> seen;
  for (const auto& [key, coef] : p.terms) {
    for (const Triple& t : reducible_triples(key.first)) seen.insert(t);
  }
  return std::vector<Triple>(seen.begin(), seen.end());
}

}  // namespace

BetaPoly BetaPoly::monomial(const Monomial& m) {
  BetaPoly p;
  p.terms[{m, 0}] = 1;
  return p;
}

void BetaPoly::add(const Monomial& m, int beta, const BigInt& coef) {
  auto key = std::make_pair(m, beta);
  auto [it, inserted] = terms.emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  } else if (it->second == 0) {
    terms.erase(it);
  }
}

bool BetaPoly::is_reduced() const {
  for (const auto& [key, coef] : terms) {
    if (!reducible_triples(key.first).empty()) return false;
  }
  return true;
}

int BetaPoly::max_degree() const {
  int d = 0;
  for (const auto& [key, coef] : terms) d = std::max(d, key.first.degree());
  return d;
}

std::map<int, BigInt> BetaPoly::degree_profile() const {
  std::map<int, BigInt> profile;
  for (const auto& [key, coef] : terms) profile[key.first.degree()] += coef;
  return profile;
}

std::vector<Monomial> BetaPoly::top_monomials() const {
  const int d = max_degree();
  std::vector<Monomial> out;
  for (const auto& [key, coef] : terms) {
    if (key.first.degree() == d) out.push_back(key.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Terms sorted by beta exponent, then monomial.
std::vector<std::pair<std::pair<Monomial, int>, BigInt>> sorted_terms(const BetaPoly& p) {
  std::vector<std::pair<std::pair<Monomial, int>, BigInt>> ts(p.terms.begin(), p.terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
    if (l.first.second != r.first.second) return l.first.second < r.first.second;
    return l.first.first < r.first.first;
  });
  return ts;
}

}  // namespace

std::string BetaPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, coef] : sorted_terms(*this)) {
    if (!first) s += " + ";
    first = false;
    std::vector<std::string> factors;
    if (coef != 1 || (key.first.gens.empty() && key.second == 0)) {
      factors.push_back(coef.str());
    }
    if (!key.first.gens.empty()) factors.push_back(key.first.str());
    if (key.second == 1) factors.push_back("beta");
    if (key.second > 1) factors.push_back("beta^" + std::to_string(key.second));
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += "*";
      s += factors[k];
    }
  }
  return s;
}

std::string BetaPoly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, coef] : sorted_terms(*this)) {
    nlohmann::ordered_json jt;
    jt["mono"] = nlohmann::ordered_json::array();
    for (const Generator& g : key.first.gens) jt["mono"].push_back({g.i, g.j});
    jt["beta"] = key.second;
    jt["coef"] = static_cast<std::int64_t>(coef);
    arr.push_back(jt);
  }
  return arr.dump();
}

BetaPoly specialize_beta_zero(const BetaPoly& p) {
  BetaPoly out;
  for (const auto& [key, coef] : p.terms) {
    if (key.second == 0) out.terms.emplace(key, coef);
  }
  return out;
}

BetaPoly reduce_at(const BetaPoly& p, const Triple& t, bool simple) {
  const Generator in(t.i, t.j), out(t.j, t.k), fresh(t.i, t.k);
  BetaPoly result;
  bool found = false;
  for (const auto& [key, coef] : p.terms) {
    const Monomial& m = key.first;
    if (!m.contains(in) || !m.contains(out)) {
      result.add(m, key.second, coef);
      continue;
    }
    found = true;
    result.add(m.without(out).with(fresh), key.second, coef);
    result.add(m.without(in).with(fresh), key.second, coef);
    if (!simple) {
      result.add(m.without(in).without(out).with(fresh), key.second + 1, coef);
    }
  }
  if (!found) {
    throw std::invalid_argument("no term contains the pair " + in.str() + "*" + out.str());
  }
  return result;
}

int edge_length(int i, int j, int n, LengthVariant v) {
  if (i == j) throw std::invalid_argument("edge endpoints must differ");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("edge endpoints must lie in 1.." + std::to_string(n));
  }
  const int diff = v == LengthVariant::Span ? j - i : i - j;
  return ((diff % n) + n) % n;
}

Triple rho_len_next(const BetaPoly& p, int n, LengthVariant v) {
  const std::vector<Triple> ts = poly_triples(p);
  if (ts.empty()) throw std::invalid_argument("polynomial is already reduced");
  int jmin = ts.front().j;
  for (const Triple& t : ts) jmin = std::min(jmin, t.j);
  bool have = false;
  Triple best{};
  int best_in = -1, best_out = -1;
  for (const Triple& t : ts) {
    if (t.j != jmin) continue;
    const int lin = edge_length(t.i, t.j, n, v);
    const int lout = edge_length(t.j, t.k, n, v);
    if (!have || lin > best_in || (lin == best_in && lout > best_out) ||
        (lin == best_in && lout == best_out && t < best)) {
      have = true;
      best = t;
      best_in = lin;
      best_out = lout;
    }
  }
  return best;
}

ReductionOrder rho_len_order(int n, LengthVariant v) {
  ReductionOrder ord;
  ord.name = "rho-len";
  ord.next = [n, v](const BetaPoly& p) -> std::optional<Triple> {
    if (poly_triples(p).empty()) return std::nullopt;
    return rho_len_next(p, n, v);
  };
  return ord;
}

ReductionOrder lex_order() {
  ReductionOrder ord;
  ord.name = "lex";
  ord.next = [](const BetaPoly& p) -> std::optional<Triple> {
    const std::vector<Triple> ts = poly_triples(p);
    if (ts.empty()) return std::nullopt;
    return ts.front();
  };
  return ord;
}

std::uint64_t seeded_state(std::uint64_t seed) { return seed; }

std::uint64_t rng_below(std::uint64_t& state, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("rng bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    // splitmix64 step
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    if (z < limit) return z % bound;
  }
}

ReductionOrder random_order(std::uint64_t seed) {
  ReductionOrder ord;
  ord.name = "random:" + std::to_string(seed);
  auto state = std::make_shared<std::uint64_t>(seeded_state(seed));
  ord.next = [state](const BetaPoly& p) -> std::optional<Triple> {
    const std::vector<Triple> ts = poly_triples(p);
    if (ts.empty()) return std::nullopt;
    return ts[static_cast<std::size_t>(rng_below(*state, ts.size()))];
  };
  return ord;
}

namespace {

// The unique longest incoming/outgoing pair of m at middle vertex j, if any.
std::optional<Triple> longest_pair_at(const Monomial& m, int j, int n, LengthVariant v) {
  int best_in = -1, best_out = -1, arg_in = 0, arg_out = 0;
  for (const Generator& g : m.gens) {
    if (g.j == j) {
      const int l = edge_length(g.i, j, n, v);
      if (l > best_in) {
        best_in = l;
        arg_in = g.i;
      }
    }
    if (g.i == j) {
      const int l = edge_length(j, g.j, n, v);
      if (l > best_out) {
        best_out = l;
        arg_out = g.j;
      }
    }
  }
  if (best_in < 0 || best_out < 0 || arg_in == arg_out) return std::nullopt;
  return Triple{arg_in, j, arg_out};
}

}  // namespace

ReductionOrder longest_first_order(int n, std::uint64_t seed, LengthVariant v) {
  ReductionOrder ord;
  ord.name = "longest-first:" + std::to_string(seed);
  auto state = std::make_shared<std::uint64_t>(seeded_state(seed));
  ord.next = [n, v, state](const BetaPoly& p) -> std::optional<Triple> {
    if (poly_triples(p).empty()) return std::nullopt;
    std::set<Triple> cands;
    for (const auto& [key, coef] : p.terms) {
      std::set<int> middles;
      for (const Generator& g : key.first.gens) {
        middles.insert(g.i);
        middles.insert(g.j);
      }
      for (int j : middles) {
        if (auto t = longest_pair_at(key.first, j, n, v)) cands.insert(*t);
      }
    }
    // Keep only pairs that are the longest at their middle vertex in every
    // term containing them, so that each rewrite touches longest pairs only.
    std::vector<Triple> safe;
    for (const Triple& t : cands) {
      const Generator in(t.i, t.j), out(t.j, t.k);
      bool ok = true;
      for (const auto& [key, coef] : p.terms) {
        if (!key.first.contains(in) || !key.first.contains(out)) continue;
        auto best = longest_pair_at(key.first, t.j, n, v);
        if (!best || *best != t) {
          ok = false;
          break;
        }
      }
      if (ok) safe.push_back(t);
    }
    if (safe.empty()) {
      throw std::logic_error("no longest pair is reducible everywhere it occurs");
    }
    return safe[static_cast<std::size_t>(rng_below(*state, safe.size()))];
  };
  return ord;
}

std::string ReductionLog::to_json() const {
  std::string s;
  for (const StepRecord& r : steps) {
    nlohmann::ordered_json j;
    j["triple"] = {r.triple.i, r.triple.j, r.triple.k};
    j["rule"] = r.simple ? "simple" : "full";
    s += j.dump();
    s += "\n";
  }
  return s;
}

BetaPoly reduce_to_normal_form(BetaPoly p, const ReductionOrder& order, bool simple,
                               ReductionLog* log, std::size_t step_bound) {
  std::size_t steps = 0;
  for (;;) {
    std::optional<Triple> t = order.next(p);
    if (!t) return p;
    if (++steps > step_bound) {
      throw ResourceLimitError("reduction exceeded " + std::to_string(step_bound) + " steps");
    }
    p = reduce_at(p, *t, simple);
    if (log) log->steps.push_back(StepRecord{*t, simple});
  }
}

std::vector<int> ReductionTree::leaves() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].children.empty()) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::map<int, long long> ReductionTree::leaf_count_by_degree() const {
  std::map<int, long long> counts;
  for (int leaf : leaves()) {
    ++counts[nodes[static_cast<std::size_t>(leaf)].m.degree()];
  }
  return counts;
}

ReductionTree reduction_tree(const Monomial& m, const ReductionOrder& order,
                             std::size_t step_bound) {
  ReductionLog log;
  reduce_to_normal_form(BetaPoly::monomial(m), order, /*simple=*/false, &log, step_bound);

  ReductionTree tree;
  tree.nodes.push_back(ReductionTree::Node{m, 0, -1, {}});
  for (const StepRecord& step : log.steps) {
    const Generator in(step.triple.i, step.triple.j), out(step.triple.j, step.triple.k),
        fresh(step.triple.i, step.triple.k);
    const std::vector<int> leaves = tree.leaves();
    for (int leaf : leaves) {
      ReductionTree::Node& node = tree.nodes[static_cast<std::size_t>(leaf)];
      if (!node.m.contains(in) || !node.m.contains(out)) continue;
      const Monomial m1 = node.m.without(out).with(fresh);
      const Monomial m2 = node.m.without(in).with(fresh);
      const Monomial m3 = node.m.without(in).without(out).with(fresh);
      const int beta = node.beta;
      for (const auto& [child, extra] :
           {std::make_pair(m1, 0), std::make_pair(m2, 0), std::make_pair(m3, 1)}) {
        tree.nodes[static_cast<std::size_t>(leaf)].children.push_back(
            static_cast<int>(tree.nodes.size()));
        tree.nodes.push_back(ReductionTree::Node{child, beta + extra, leaf, {}});
      }
    }
  }
  return tree;
}

}  // namespace nusubdiv
