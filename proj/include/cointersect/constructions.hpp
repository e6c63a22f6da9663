#pragma once

#include <vector>

#include "cointersect/graph.hpp"
#include "cointersect/representation.hpp"

namespace coint {

/// Points 0..k*k-1 grouped into parallel classes of k disjoint blocks of size k.
struct ResolvablePacking {
  int k = 0;
  std::vector<std::vector<std::vector<int>>> classes;  // classes[l][i] = block S^l_i, sorted

  int point_count() const { return k * k; }
  friend bool operator==(const ResolvablePacking&, const ResolvablePacking&) = default;
};

/// Leaf i+1 of the star receives the i-th pair of A x B (row-major); the
/// centre receives both full alphabets.
Cir construct_star(int n, int alpha, int beta);

/// Edges are split into groups of beta consecutive edges; group i uses A-label i
/// and walks the B-labels up, then down, then up again, so neighbouring groups
/// share their boundary label.
Cir construct_path(int n, int alpha, int beta);

/// As construct_path but closed. With alpha * beta == n and alpha odd, the last
/// two groups are reordered so the wrap-around vertex gets a single B-label;
/// `correction = false` disables that (the result then fails verification).
/// With alpha * beta > n the edge labels follow a closed rook tour of the
/// alpha x beta grid.
Cir construct_cycle(int n, int alpha, int beta, bool correction = true);

/// (|U|, |W|)-representation of a bipartite graph: A_u = {u}, B_u = N(u) for
/// u in U, symmetrically for W.
Cir construct_bipartite(const Graph& g);

/// (t, t s^2)-representation of K_{n,n} with n = t s. Left vertex i gets
/// ({i / s}, row i % s) and right vertex j gets (A, column j) of an s x ts
/// matrix of B-labels.
Cir construct_knn(int n, int t, int s);

/// Rows, columns and wrapped diagonals of the k x k grid.
ResolvablePacking packing_three_classes(int k);

/// Affine plane over Z_k (k prime): the vertical class, then the lines of slope
/// m = 0..k-1.
ResolvablePacking affine_plane(int k);

/// (k^2, k^2)-representation of the complete r-partite graph with parts of size
/// k^2 using the first r classes.
Cir construct_multipartite(const ResolvablePacking& packing, int r);

/// Blocks of each class partition the points, no pair occurs in two blocks and
/// blocks of different classes meet in exactly one point.
bool verify_packing(const ResolvablePacking& p);

/// verify_packing plus every pair of points lies in some block.
bool is_design(const ResolvablePacking& p);

bool is_prime(int k);

}  // namespace coint
