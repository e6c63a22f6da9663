#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cointersect/feature_set.hpp"
#include "cointersect/graph.hpp"

namespace coint {

/// Cointersection representation: vertex v carries (A_v | B_v) with A_v a
/// subset of an alphabet of size alpha and B_v of an alphabet of size beta.
/// Empty sets are allowed.
struct Cir {
  int alpha = 1;
  int beta = 1;
  std::vector<FeatureSet> a;
  std::vector<FeatureSet> b;

  /// n vertices, every set empty.
  static Cir empty(int n, int alpha, int beta);

  int vertex_count() const { return static_cast<int>(a.size()); }
  int total_features() const { return alpha + beta; }

  /// True when u and v share an A-feature and a B-feature.
  bool linked(int u, int v) const { return a[u].intersects(a[v]) && b[u].intersects(b[v]); }

  friend bool operator==(const Cir&, const Cir&) = default;
};

/// Throws DomainError unless alphabets are nonempty, both sides have one set per
/// vertex and every set lives in its alphabet.
void check_well_formed(const Cir& r);

/// Matched unordered pairs out of n(n-1)/2.
struct Score {
  std::int64_t matched = 0;
  std::int64_t total = 0;
  bool perfect() const { return matched == total; }
  friend bool operator==(const Score&, const Score&) = default;
};

/// Pairs whose adjacency disagrees with the cointersection condition. Empty
/// means r represents g.
std::vector<Edge> verify(const Graph& g, const Cir& r);
Score score(const Graph& g, const Cir& r);

struct PairCommunity {
  int a = 0;
  int b = 0;
  std::vector<int> members;
};

struct Communities {
  std::vector<std::vector<int>> a;  // a[f]: vertices holding A-feature f
  std::vector<std::vector<int>> b;
  std::vector<PairCommunity> pairs;  // every (a, b) with a nonempty intersection
};

Communities communities(const Cir& r);

/// Same representation up to relabeling features within A and within B, and
/// swapping A with B when both alphabets have the same size.
bool equivalent(const Cir& lhs, const Cir& rhs);

/// Exchanges the roles of the A and B alphabets.
Cir swapped(const Cir& r);

/// Applies a_map to A-labels and b_map to B-labels.
Cir relabeled(const Cir& r, std::span<const int> a_map, std::span<const int> b_map);

/// J(S,T) = |S n T| / |S u T|, with J(empty, empty) = 1.
double jaccard(const FeatureSet& s, const FeatureSet& t);
/// (1/n) sum_v [J(A_v, A'_v) + J(B_v, B'_v)] / 2.
double average_jaccard(const Cir& lhs, const Cir& rhs);

struct Alignment {
  Cir relabeled;
  double average_jaccard = 0.0;
  std::vector<int> a_map;  // candidate A-label -> reference A-label
  std::vector<int> b_map;
};

/// Relabels the candidate's A- and B-features (separately) to maximize the
/// average Jaccard similarity with the reference.
Alignment align_jaccard(const Cir& reference, const Cir& candidate);

/// Graph whose edges are exactly the pairs linked by r.
Graph graph_from_assignment(const Cir& r);

/// (k, 1)-representation from an edge clique cover with k cliques: A_v holds
/// the indices of the cliques containing v, B_v = {0}.
Cir mirror_from_clique_cover(const Graph& g, std::span<const std::vector<int>> cover);

}  // namespace coint
