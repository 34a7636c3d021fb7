#include "nusubdiv/path.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "nusubdiv/errors.hpp"

namespace nusubdiv {

int LatticePath::east() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::E));
}

int LatticePath::north() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::N));
}

LatticePath LatticePath::parse(std::string_view word) {
  LatticePath p;
  p.steps.reserve(word.size());
  for (char c : word) {
    if (c == 'E') {
      p.steps.push_back(Step::E);
    } else if (c == 'N') {
      p.steps.push_back(Step::N);
    } else {
      throw std::invalid_argument(std::string("invalid step '") + c + "'");
    }
  }
  return p;
}

std::string LatticePath::str() const {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s.push_back(step_char(st));
  return s;
}

LatticePath IndexedPath::word() const {
  LatticePath p;
  p.steps.reserve(letters.size());
  for (const Letter& l : letters) p.steps.push_back(l.step);
  return p;
}

std::string IndexedPath::str() const {
  std::string s;
  for (const Letter& l : letters) {
    s.push_back(step_char(l.step));
    s += std::to_string(l.index);
  }
  return s;
}

std::string IndexedPath::to_json() const {
  nlohmann::ordered_json j;
  j["letters"] = nlohmann::ordered_json::array();
  for (const Letter& l : letters) {
    j["letters"].push_back({std::string(1, step_char(l.step)), l.index});
  }
  j["I"] = I;
  j["J"] = J;
  j["V"] = V;
  j["n"] = n;
  j["w"] = w;
  j["cyclic_peaks"] = nlohmann::ordered_json::array();
  for (const auto& [np, ep] : cyclic_peaks) j["cyclic_peaks"].push_back({np, ep});
  return j.dump();
}

IndexedPath IndexedPath::from_letters(std::vector<Letter> letters) {
  IndexedPath p;
  p.letters = std::move(letters);
  std::set<int> is, js;
  for (const Letter& l : p.letters) {
    if (l.step == Step::E) {
      is.insert(l.index);
    } else {
      js.insert(l.index);
    }
    p.n = std::max(p.n, l.index);
  }
  p.I.assign(is.begin(), is.end());
  p.J.assign(js.begin(), js.end());
  std::set_intersection(p.I.begin(), p.I.end(), p.J.begin(), p.J.end(),
                        std::back_inserter(p.V));
  p.w = static_cast<int>(p.V.size());
  const int len = static_cast<int>(p.letters.size());
  for (int pos = 1; pos < len; ++pos) {
    if (p.letters[pos - 1].step == Step::N && p.letters[pos].step == Step::E) {
      p.cyclic_peaks.emplace_back(pos, pos + 1);
    }
  }
  p.cyclic_peaks.emplace_back(len, 1);  // wrap-around pair
  return p;
}

LatticePath close_path(const LatticePath& nu) {
  LatticePath closed;
  closed.steps.reserve(nu.steps.size() + 2);
  closed.steps.push_back(Step::E);
  closed.steps.insert(closed.steps.end(), nu.steps.begin(), nu.steps.end());
  closed.steps.push_back(Step::N);
  return closed;
}

IndexedPath canonical_index(const LatticePath& closed) {
  if (closed.steps.empty() || closed.steps.front() != Step::E ||
      closed.steps.back() != Step::N) {
    throw std::invalid_argument("path is not closed: expected a word starting with E and ending with N");
  }
  std::vector<Letter> letters;
  letters.reserve(closed.steps.size());
  int counter = 0;
  for (std::size_t pos = 0; pos < closed.steps.size(); ++pos) {
    Step st = closed.steps[pos];
    if (st == Step::E) {
      ++counter;
    } else if (pos == 0 || closed.steps[pos - 1] == Step::E) {
      // first N of a run: shares the index of the E right before it
    } else {
      ++counter;
    }
    letters.push_back(Letter{st, counter});
  }
  return IndexedPath::from_letters(std::move(letters));
}

IndexedPath index_path(const LatticePath& nu) {
  return canonical_index(close_path(nu));
}

IndexedPath cyclic_shift(const IndexedPath& p, int k) {
  if (k < 1 || k > p.w) {
    throw std::invalid_argument("cyclic shift index " + std::to_string(k) +
                                " out of range 1.." + std::to_string(p.w));
  }
  const int start = p.cyclic_peaks[static_cast<std::size_t>(k) - 1].second;  // 1-based
  std::vector<Letter> rotated(p.letters.begin() + (start - 1), p.letters.end());
  rotated.insert(rotated.end(), p.letters.begin(), p.letters.begin() + (start - 1));
  return IndexedPath::from_letters(std::move(rotated));
}

std::vector<int> shift_relabel(const IndexedPath& p, int k) {
  IndexedPath rotated = cyclic_shift(p, k);
  IndexedPath fresh = canonical_index(rotated.word());
  std::vector<int> sigma(static_cast<std::size_t>(p.n) + 1, 0);
  for (std::size_t pos = 0; pos < rotated.letters.size(); ++pos) {
    const int old_idx = rotated.letters[pos].index;
    const int new_idx = fresh.letters[pos].index;
    if (sigma[old_idx] != 0 && sigma[old_idx] != new_idx) {
      throw std::logic_error("inconsistent relabel for index " + std::to_string(old_idx));
    }
    sigma[old_idx] = new_idx;
  }
  return sigma;
}

LatticePath strip(const IndexedPath& p) {
  if (p.letters.size() < 2 || p.letters.front().step != Step::E ||
      p.letters.back().step != Step::N) {
    throw std::invalid_argument("cannot strip: path does not start with E and end with N");
  }
  LatticePath inner;
  for (std::size_t pos = 1; pos + 1 < p.letters.size(); ++pos) {
    inner.steps.push_back(p.letters[pos].step);
  }
  return inner;
}

namespace {

// north_before[i] = number of N steps before the (i+1)-th E step, i = 0..a-1.
std::vector<int> east_floors(const LatticePath& nu) {
  std::vector<int> m;
  int norths = 0;
  for (Step st : nu.steps) {
    if (st == Step::E) {
      m.push_back(norths);
    } else {
      ++norths;
    }
  }
  return m;
}

}  // namespace

long long nu_catalan(const LatticePath& nu) {
  const int a = nu.east();
  const int b = nu.north();
  if (a == 0) return 1;
  const std::vector<int> m = east_floors(nu);
  // f[v] = number of admissible height prefixes ending at height v.
  std::vector<long long> f(static_cast<std::size_t>(b) + 1, 0);
  for (int v = m[0]; v <= b; ++v) f[v] = 1;
  for (int i = 1; i < a; ++i) {
    std::vector<long long> g(static_cast<std::size_t>(b) + 1, 0);
    long long prefix = 0;
    for (int v = 0; v <= b; ++v) {
      prefix += f[v];
      if (v >= m[i]) g[v] = prefix;
    }
    f.swap(g);
  }
  return std::accumulate(f.begin(), f.end(), 0LL);
}

bool weakly_above(const LatticePath& path, const LatticePath& nu) {
  if (path.east() != nu.east() || path.north() != nu.north()) {
    throw std::invalid_argument("paths do not share an endpoint");
  }
  const std::vector<int> mp = east_floors(path);
  const std::vector<int> mn = east_floors(nu);
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (mp[i] < mn[i]) return false;
  }
  return true;
}

std::vector<LatticePath> enumerate_paths_weakly_above(const LatticePath& nu, int guard) {
  const int total = nu.size();
  if (total > guard) {
    throw ResourceLimitError("path has " + std::to_string(total) +
                             " steps; enumeration is guarded at " + std::to_string(guard));
  }
  LatticePath word;
  word.steps.assign(static_cast<std::size_t>(nu.east()), Step::E);
  word.steps.insert(word.steps.end(), static_cast<std::size_t>(nu.north()), Step::N);
  std::vector<LatticePath> out;
  do {
    if (weakly_above(word, nu)) out.push_back(word);
  } while (std::next_permutation(word.steps.begin(), word.steps.end()));
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace nusubdiv
