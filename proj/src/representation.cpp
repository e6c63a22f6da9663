#include "cointersect/representation.hpp"

#include <algorithm>
#include <string>

#include "cointersect/error.hpp"
#include "cointersect/kernels.hpp"

namespace coint {

Cir Cir::empty(int n, int alpha, int beta) {
  if (alpha < 1 || beta < 1) throw DomainError("feature alphabets must be nonempty");
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  Cir r;
  r.alpha = alpha;
  r.beta = beta;
  r.a.assign(n, FeatureSet(alpha));
  r.b.assign(n, FeatureSet(beta));
  return r;
}

void check_well_formed(const Cir& r) {
  if (r.alpha < 1 || r.beta < 1) throw DomainError("feature alphabets must be nonempty");
  if (r.a.size() != r.b.size()) throw DomainError("A and B sides cover different vertex counts");
  for (std::size_t v = 0; v < r.a.size(); ++v) {
    if (r.a[v].universe() != static_cast<std::size_t>(r.alpha) ||
        r.b[v].universe() != static_cast<std::size_t>(r.beta)) {
      throw DomainError("feature set of vertex " + std::to_string(v) + " uses the wrong alphabet");
    }
  }
}

namespace {

void check_matches(const Graph& g, const Cir& r) {
  check_well_formed(r);
  if (r.vertex_count() != g.n()) {
    throw DomainError("representation covers " + std::to_string(r.vertex_count()) + " vertices, graph has " +
                      std::to_string(g.n()));
  }
}

}  // namespace

std::vector<Edge> verify(const Graph& g, const Cir& r) {
  check_matches(g, r);
  std::vector<Edge> bad;
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (r.linked(u, v) != g.adjacent(u, v)) bad.push_back({u, v});
  return bad;
}

Score score(const Graph& g, const Cir& r) {
  check_matches(g, r);
  const int n = g.n();
  Score s;
  s.total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (r.alpha <= 64 && r.beta <= 64) {
    std::vector<std::uint64_t> am(n);
    std::vector<std::uint64_t> bm(n);
    for (int v = 0; v < n; ++v) {
      am[v] = r.a[v].mask();
      bm[v] = r.b[v].mask();
    }
    std::vector<std::uint8_t> adj(n);
    std::int64_t twice = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) adj[v] = g.adjacent(u, v) ? 1 : 0;
      twice += static_cast<std::int64_t>(kernels::row_matches_excluding(am, bm, adj, am[u], bm[u], u));
    }
    s.matched = twice / 2;
    return s;
  }
  s.matched = s.total - static_cast<std::int64_t>(verify(g, r).size());
  return s;
}

Communities communities(const Cir& r) {
  check_well_formed(r);
  Communities c;
  c.a.resize(r.alpha);
  c.b.resize(r.beta);
  for (int v = 0; v < r.vertex_count(); ++v) {
    for (int f : r.a[v].members()) c.a[f].push_back(v);
    for (int f : r.b[v].members()) c.b[f].push_back(v);
  }
  for (int fa = 0; fa < r.alpha; ++fa) {
    for (int fb = 0; fb < r.beta; ++fb) {
      PairCommunity pc{fa, fb, {}};
      for (int v : c.a[fa])
        if (r.b[v].contains(fb)) pc.members.push_back(v);
      if (!pc.members.empty()) c.pairs.push_back(std::move(pc));
    }
  }
  return c;
}

namespace {

// Community vertex sets of one side, as a sorted multiset.
std::vector<FeatureSet> side_communities(const std::vector<FeatureSet>& sets, int alphabet, int n) {
  std::vector<FeatureSet> out(alphabet, FeatureSet(static_cast<std::size_t>(n)));
  for (int v = 0; v < n; ++v)
    for (int f : sets[v].members()) out[f].insert(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool equivalent(const Cir& lhs, const Cir& rhs) {
  check_well_formed(lhs);
  check_well_formed(rhs);
  const int n = lhs.vertex_count();
  if (rhs.vertex_count() != n) return false;
  // A relabeling only permutes features, so it maps each community vertex set
  // onto another one unchanged. Two sides are relabelings of each other exactly
  // when their community multisets agree.
  auto la = side_communities(lhs.a, lhs.alpha, n);
  auto lb = side_communities(lhs.b, lhs.beta, n);
  auto ra = side_communities(rhs.a, rhs.alpha, n);
  auto rb = side_communities(rhs.b, rhs.beta, n);
  if (lhs.alpha == rhs.alpha && lhs.beta == rhs.beta && la == ra && lb == rb) return true;
  if (lhs.alpha == lhs.beta && rhs.alpha == rhs.beta && lhs.alpha == rhs.alpha) return la == rb && lb == ra;
  return false;
}

Cir swapped(const Cir& r) {
  Cir out;
  out.alpha = r.beta;
  out.beta = r.alpha;
  out.a = r.b;
  out.b = r.a;
  return out;
}

Cir relabeled(const Cir& r, std::span<const int> a_map, std::span<const int> b_map) {
  check_well_formed(r);
  if (a_map.size() != static_cast<std::size_t>(r.alpha) || b_map.size() != static_cast<std::size_t>(r.beta)) {
    throw DomainError("relabeling maps must cover each alphabet");
  }
  Cir out;
  out.alpha = r.alpha;
  out.beta = r.beta;
  for (int v = 0; v < r.vertex_count(); ++v) {
    out.a.push_back(r.a[v].remapped(a_map, r.alpha));
    out.b.push_back(r.b[v].remapped(b_map, r.beta));
  }
  return out;
}

double jaccard(const FeatureSet& s, const FeatureSet& t) {
  const std::size_t inter = s.intersection_size(t);
  const std::size_t uni = s.size() + t.size() - inter;
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double average_jaccard(const Cir& lhs, const Cir& rhs) {
  if (lhs.vertex_count() != rhs.vertex_count()) throw DomainError("representations cover different vertex counts");
  const int n = lhs.vertex_count();
  if (n == 0) return 1.0;
  double sum = 0.0;
  for (int v = 0; v < n; ++v) sum += (jaccard(lhs.a[v], rhs.a[v]) + jaccard(lhs.b[v], rhs.b[v])) / 2.0;
  return sum / n;
}

Graph graph_from_assignment(const Cir& r) {
  check_well_formed(r);
  std::vector<Edge> edges;
  const int n = r.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (r.linked(u, v)) edges.push_back({u, v});
  return Graph(n, edges);
}

Cir mirror_from_clique_cover(const Graph& g, std::span<const std::vector<int>> cover) {
  const int k = static_cast<int>(cover.size());
  Cir r = Cir::empty(g.n(), std::max(1, k), 1);
  std::vector<FeatureSet> covered(g.n(), FeatureSet(static_cast<std::size_t>(g.n())));
  for (int c = 0; c < k; ++c) {
    const auto& clique = cover[c];
    for (std::size_t i = 0; i < clique.size(); ++i) {
      const int u = clique[i];
      if (u < 0 || u >= g.n()) throw DomainError("clique member outside vertex range");
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        const int v = clique[j];
        if (!g.adjacent(u, v)) {
          throw DomainError("cover entry " + std::to_string(c) + " is not a clique: " + std::to_string(u) + " and " +
                            std::to_string(v) + " are not adjacent");
        }
        covered[u].insert(v);
        covered[v].insert(u);
      }
      r.a[u].insert(c);
    }
  }
  for (const Edge& e : g.edges()) {
    if (!covered[e.u].contains(e.v)) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not covered");
    }
  }
  for (int v = 0; v < g.n(); ++v) r.b[v].insert(0);
  return r;
}

}  // namespace coint
