#include "cointersect/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace coint {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& b, int i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
bool test_bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1U; }

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

int count(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t bits = b[w];
    while (bits) {
      f(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
}

Bits row_bits(const Graph& g, int v) {
  auto r = g.row(v);
  return Bits(r.begin(), r.end());
}

void bron_kerbosch(const std::vector<Bits>& adj, Clique& current, Bits p, Bits x, std::vector<Clique>& out) {
  if (!any(p)) {
    if (!any(x) && current.size() >= 2) {
      Clique c = current;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Tomita pivot: the vertex of P u X with most neighbours in P.
  int pivot = -1;
  int best = -1;
  auto consider = [&](int u) {
    int c = 0;
    for (std::size_t w = 0; w < p.size(); ++w) c += std::popcount(p[w] & adj[u][w]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  };
  for_each_bit(p, consider);
  for_each_bit(x, consider);

  Bits candidates = p;
  for (std::size_t w = 0; w < p.size(); ++w) candidates[w] &= ~adj[pivot][w];
  for_each_bit(candidates, [&](int v) {
    Bits np = p;
    Bits nx = x;
    for (std::size_t w = 0; w < p.size(); ++w) {
      np[w] &= adj[v][w];
      nx[w] &= adj[v][w];
    }
    current.push_back(v);
    bron_kerbosch(adj, current, std::move(np), std::move(nx), out);
    current.pop_back();
    clear_bit(p, v);
    set_bit(x, v);
  });
}

int edge_index(const std::vector<Edge>& edges, int u, int v) {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  return static_cast<int>(it - edges.begin());
}

Bits clique_edges(const Clique& c, const std::vector<Edge>& edges) {
  Bits b = make_bits(edges.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) set_bit(b, edge_index(edges, c[i], c[j]));
  return b;
}

struct CoverSearch {
  const std::vector<Bits>* clique_bits;
  std::vector<std::vector<int>> cliques_of_edge;
  int max_clique_edges = 1;
  std::vector<int> chosen;

  // Depth-limited search for a cover using at most `budget` more cliques.
  bool search(const Bits& uncovered, int budget) {
    const int left = count(uncovered);
    if (left == 0) return true;
    if (budget == 0) return false;
    if (left > budget * max_clique_edges) return false;
    // Branch on the uncovered edge lying in the fewest maximal cliques.
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    for_each_bit(uncovered, [&](int e) {
      if (cliques_of_edge[e].size() < fewest) {
        fewest = cliques_of_edge[e].size();
        pick = e;
      }
    });
    for (int c : cliques_of_edge[pick]) {
      Bits next = uncovered;
      const Bits& cb = (*clique_bits)[c];
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= ~cb[w];
      chosen.push_back(c);
      if (search(next, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
  const int n = g.n();
  std::vector<Bits> adj;
  adj.reserve(n);
  for (int v = 0; v < n; ++v) adj.push_back(row_bits(g, v));
  Bits p = make_bits(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) set_bit(p, v);
  std::vector<Clique> out;
  Clique current;
  bron_kerbosch(adj, current, p, make_bits(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> greedy_clique_cover(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<Clique> cover;
  Bits covered = make_bits(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (test_bit(covered, static_cast<int>(e))) continue;
    // Grow {u, v} by common neighbours, preferring vertices that add the most
    // uncovered edges.
    Clique clique{edges[e].u, edges[e].v};
    Bits common = row_bits(g, edges[e].u);
    const auto rv = g.row(edges[e].v);
    for (std::size_t w = 0; w < common.size(); ++w) common[w] &= rv[w];
    while (any(common)) {
      int best = -1;
      int best_gain = -1;
      for_each_bit(common, [&](int x) {
        int gain = 0;
        for (int y : clique)
          if (!test_bit(covered, edge_index(edges, x, y))) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best = x;
        }
      });
      clique.push_back(best);
      const auto rb = g.row(best);
      for (std::size_t w = 0; w < common.size(); ++w) common[w] &= rb[w];
    }
    std::sort(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) set_bit(covered, edge_index(edges, clique[i], clique[j]));
    cover.push_back(std::move(clique));
  }
  return cover;
}

std::vector<Clique> minimum_clique_cover(const Graph& g) {
  const auto& edges = g.edges();
  if (edges.empty()) return {};
  const auto cliques = maximal_cliques(g);
  std::vector<Bits> bits;
  bits.reserve(cliques.size());
  CoverSearch search;
  search.cliques_of_edge.resize(edges.size());
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    bits.push_back(clique_edges(cliques[c], edges));
    const int k = static_cast<int>(cliques[c].size());
    search.max_clique_edges = std::max(search.max_clique_edges, k * (k - 1) / 2);
    for_each_bit(bits.back(), [&](int e) { search.cliques_of_edge[e].push_back(static_cast<int>(c)); });
  }
  search.clique_bits = &bits;

  // Iterative deepening from a counting bound up to the greedy size.
  const int greedy = static_cast<int>(greedy_clique_cover(g).size());
  Bits all = make_bits(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) set_bit(all, static_cast<int>(e));
  const int m = static_cast<int>(edges.size());
  int k = (m + search.max_clique_edges - 1) / search.max_clique_edges;
  for (; k < greedy; ++k) {
    search.chosen.clear();
    if (search.search(all, k)) break;
  }
  if (k >= greedy) return greedy_clique_cover(g);
  std::vector<Clique> cover;
  for (int c : search.chosen) cover.push_back(cliques[c]);
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace coint
