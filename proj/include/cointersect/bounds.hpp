#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cointersect/graph.hpp"

namespace coint {

/// Exact intersection number (minimum edge clique cover). Triangle-free graphs
/// return |E| at any size; otherwise n must not exceed `limit`.
int theta1_exact(const Graph& g, int limit = 20);

/// Size of a greedy edge clique cover; an upper bound on theta1.
int theta1_greedy(const Graph& g);

/// min over alpha of alpha + ceil(theta1 / alpha); 0 when theta1 is 0.
int thetac_lower(int theta1);

struct UpperBound {
  std::string name;
  double value = 0.0;        // un-rounded formula value
  std::int64_t ceiling = 0;  // usable integer bound
  bool applicable = false;
  std::string note;
};

struct BoundsOptions {
  std::optional<int> theta1;           // overrides the computed value; treated as exact
  std::optional<int> chordal_clique;   // largest clique r of a chordal input
  std::optional<int> complement_degree;  // d with min degree >= n - d
  int exact_limit = 20;
};

struct BoundsReport {
  int n = 0;
  int max_degree = 0;
  int theta1 = 0;
  bool theta1_exact = false;
  int lower_thetac = 0;
  std::vector<UpperBound> upper;

  /// Smallest applicable ceiling.
  std::int64_t best_upper() const;
};

/// theta1 (exact when feasible, greedy otherwise) and every bound formula.
BoundsReport thetac_bounds(const Graph& g, const BoundsOptions& options = {});

/// Upper-bound candidates only, for a known theta1.
std::vector<UpperBound> thetac_upper_bounds(const Graph& g, int theta1, const BoundsOptions& options = {});

/// s * ((8 d^(2s+2))^(1/s) + d - 1) * n^(1/s) + r - s.
double f_upper_bound(int d, int r, int s, int n);

}  // namespace coint
