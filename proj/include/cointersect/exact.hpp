#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "cointersect/cnf.hpp"
#include "cointersect/representation.hpp"
#include "cointersect/solver.hpp"

namespace coint {

struct ExactOptions {
  std::optional<int> theta1;  // trusted exact theta1; computed when absent
  std::optional<std::chrono::milliseconds> timeout;
  int threads = 0;  // concurrent split probes; 0 = hardware concurrency
  std::function<void(const CnfInstance&)> on_encode;  // sees every probed instance
};

/// One (alpha, beta) probe. `pruned` marks totals with no split satisfying
/// alpha * beta >= theta1.
struct Probe {
  int total = 0;
  int alpha = 0;
  int beta = 0;
  SatStatus status = SatStatus::unknown;
  std::uint64_t conflicts = 0;
};

struct ExactResult {
  int theta_c = 0;
  int alpha = 0;
  int beta = 0;
  Cir witness;
  int theta1 = 0;
  bool theta1_exact = false;
  int lower = 0;
  int upper = 0;
  std::vector<Probe> probes;
  std::vector<int> pruned_totals;
};

/// Binary search on the total over [lower, upper]; at each total the splits
/// alpha <= total/2 with alpha*beta >= theta1 are tried and the smallest
/// satisfiable alpha wins. Throws LimitError if a probe runs out of time.
ExactResult theta_c_exact(const Graph& g, const ExactOptions& options = {});

/// Splits alpha <= beta of `total` allowed by alpha * beta >= theta1.
std::vector<std::pair<int, int>> feasible_splits(int total, int theta1);

}  // namespace coint
