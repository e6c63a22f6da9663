#pragma once

#include <cstdint>
#include <vector>

#include "cointersect/graph.hpp"
#include "cointersect/representation.hpp"

namespace coint {

/// Brute-force ground truth for tiny graphs. Deliberately naive: no symmetry
/// breaking, no bounds beyond the limits themselves.
struct OracleLimits {
  int max_n = 5;
  int max_total_features = 6;
  std::uint64_t max_assignments = 2'000'000'000ULL;  // partial assignments visited
};

struct OracleResult {
  int theta_c = 0;
  int alpha = 0;
  int beta = 0;
  Cir witness;
};

/// Smallest alpha + beta (then smallest alpha) admitting a representation,
/// found by exhaustive search over per-vertex (A_v, B_v) choices.
OracleResult brute_theta_c(const Graph& g, const OracleLimits& limits = {});

/// True when an (alpha, beta)-representation exists; the first one in
/// lexicographic assignment order is stored in `witness` when given.
bool brute_exists(const Graph& g, int alpha, int beta, const OracleLimits& limits = {}, Cir* witness = nullptr);

/// Minimum edge clique cover by trying subsets of maximal cliques in increasing
/// size. Maximal cliques come from a scan over all vertex subsets.
int brute_theta1(const Graph& g, const OracleLimits& limits = {});

struct CirClasses {
  std::vector<Cir> representatives;
  std::size_t total_representations = 0;
  std::size_t class_count() const { return representatives.size(); }
};

/// Every (alpha, beta)-representation, bucketed up to relabeling and A/B swap.
CirClasses enumerate_optimal_cirs(const Graph& g, int alpha, int beta, const OracleLimits& limits = {});

}  // namespace coint
