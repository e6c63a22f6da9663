#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coint {

/// Unordered vertex pair in canonical (u < v) order.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Canonicalizes and deduplicates the edges. Throws DomainError on self-loops
  /// or endpoints outside [0, n).
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;
  std::vector<int> neighbors(int v) const;

  /// Adjacency row of v as a bitset over vertices, ceil(n/64) words.
  std::span<const std::uint64_t> row(int v) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> rows_;
};

/// Parses "u v" lines. '#' lines are comments; an optional first data line
/// "n <N>" fixes the vertex count.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list; always writes the "n <N>" header.
std::string render_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

namespace families {
Graph star(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int n1, int n2);
Graph complete_multipartite(std::span<const int> parts);
/// K_{n,n} minus the perfect matching u_i v_i; left part 0..n-1, right n..2n-1.
Graph knn_minus_matching(int n);
/// Zachary's karate club, 34 members, 78 friendships.
Graph karate();
}  // namespace families

enum class Family { star, path, cycle, complete, complete_bipartite, complete_multipartite, knn_minus_matching, karate };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);
/// Dispatches to families::*; `params` holds n for one-parameter families and
/// the part sizes for the (multi)partite ones.
Graph generate(Family family, std::span<const int> params);

bool is_triangle_free(const Graph& g);
Graph complement(const Graph& g);
/// side[v] in {0, 1} when g is bipartite. Isolated vertices go to side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace coint
