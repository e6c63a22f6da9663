#include "cointersect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "cointersect/error.hpp"

namespace coint {
namespace {

void check_size(const Graph& g, const OracleLimits& limits) {
  if (g.n() > limits.max_n) {
    throw LimitError("oracle: " + std::to_string(g.n()) + " vertices exceed max_n = " + std::to_string(limits.max_n));
  }
}

void check_split(int alpha, int beta, const OracleLimits& limits) {
  if (alpha < 1 || beta < 1) throw DomainError("feature alphabets must be nonempty");
  if (alpha + beta > limits.max_total_features) {
    throw LimitError("oracle: alpha + beta = " + std::to_string(alpha + beta) + " exceeds max_total_features = " +
                     std::to_string(limits.max_total_features));
  }
}

// Walks every assignment vertex by vertex, options in increasing (A mask, B
// mask) order, and abandons a prefix as soon as one of its pairs disagrees with
// the graph. `visit` returns false to stop the walk.
class Enumerator {
 public:
  Enumerator(const Graph& g, int alpha, int beta, const OracleLimits& limits)
      : g_(g), alpha_(alpha), beta_(beta), limits_(limits), a_(g.n()), b_(g.n()) {}

  template <class Visit>
  void run(Visit&& visit) {
    stop_ = false;
    step(0, visit);
  }

  Cir current() const {
    Cir r = Cir::empty(g_.n(), alpha_, beta_);
    for (int v = 0; v < g_.n(); ++v) {
      r.a[v] = FeatureSet::from_mask(alpha_, a_[v]);
      r.b[v] = FeatureSet::from_mask(beta_, b_[v]);
    }
    return r;
  }

 private:
  template <class Visit>
  void step(int v, Visit& visit) {
    if (stop_) return;
    if (v == g_.n()) {
      if (!visit(*this)) stop_ = true;
      return;
    }
    const std::uint64_t na = std::uint64_t{1} << alpha_;
    const std::uint64_t nb = std::uint64_t{1} << beta_;
    for (std::uint64_t am = 0; am < na && !stop_; ++am) {
      for (std::uint64_t bm = 0; bm < nb && !stop_; ++bm) {
        if (++visited_ > limits_.max_assignments) throw LimitError("oracle: assignment budget exhausted");
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
          const bool linked = (a_[u] & am) != 0 && (b_[u] & bm) != 0;
          ok = linked == g_.adjacent(u, v);
        }
        if (!ok) continue;
        a_[v] = am;
        b_[v] = bm;
        step(v + 1, visit);
      }
    }
  }

  const Graph& g_;
  int alpha_;
  int beta_;
  const OracleLimits& limits_;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
  std::uint64_t visited_ = 0;
  bool stop_ = false;
};

// Community vertex sets per side, sorted; the pair (or its swap) identifies a
// class up to relabeling.
std::vector<std::vector<int>> side_key(const std::vector<FeatureSet>& sets, int alphabet) {
  std::vector<std::vector<int>> key(alphabet);
  for (std::size_t v = 0; v < sets.size(); ++v)
    for (int f : sets[v].members()) key[f].push_back(static_cast<int>(v));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

bool brute_exists(const Graph& g, int alpha, int beta, const OracleLimits& limits, Cir* witness) {
  check_size(g, limits);
  check_split(alpha, beta, limits);
  bool found = false;
  Enumerator e(g, alpha, beta, limits);
  e.run([&](const Enumerator& en) {
    found = true;
    if (witness) *witness = en.current();
    return false;
  });
  return found;
}

OracleResult brute_theta_c(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits);
  for (int total = 2; total <= limits.max_total_features; ++total) {
    for (int alpha = 1; alpha <= total / 2; ++alpha) {
      OracleResult r;
      if (brute_exists(g, alpha, total - alpha, limits, &r.witness)) {
        r.theta_c = total;
        r.alpha = alpha;
        r.beta = total - alpha;
        return r;
      }
    }
  }
  throw LimitError("oracle: no representation with at most " + std::to_string(limits.max_total_features) +
                   " features");
}

int brute_theta1(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits);
  const int n = g.n();
  if (n > 20) throw LimitError("oracle: subset scan needs n <= 20");
  auto is_clique = [&](std::uint32_t s) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((s >> u & 1U) && (s >> v & 1U) && !g.adjacent(u, v)) return false;
    return true;
  };
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (std::popcount(s) < 2 || !is_clique(s)) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w)
      if (!(s >> w & 1U) && is_clique(s | (1U << w))) maximal = false;
    if (maximal) cliques.push_back(s);
  }
  const auto& edges = g.edges();
  if (edges.empty()) return 0;
  auto covers = [&](const std::vector<int>& pick) {
    for (const Edge& e : edges) {
      const std::uint32_t need = (1U << e.u) | (1U << e.v);
      bool hit = false;
      for (int c : pick)
        if ((cliques[c] & need) == need) hit = true;
      if (!hit) return false;
    }
    return true;
  };
  const int m = static_cast<int>(cliques.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      if (covers(pick)) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InternalError("maximal cliques do not cover the edges");
}

CirClasses enumerate_optimal_cirs(const Graph& g, int alpha, int beta, const OracleLimits& limits) {
  check_size(g, limits);
  check_split(alpha, beta, limits);
  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  std::map<Key, std::size_t> seen;
  CirClasses out;
  Enumerator e(g, alpha, beta, limits);
  e.run([&](const Enumerator& en) {
    Cir r = en.current();
    ++out.total_representations;
    Key key{side_key(r.a, alpha), side_key(r.b, beta)};
    if (alpha == beta) key = std::min(key, Key{key.second, key.first});
    if (seen.emplace(std::move(key), out.representatives.size()).second) out.representatives.push_back(std::move(r));
    return true;
  });
  return out;
}

}  // namespace coint
