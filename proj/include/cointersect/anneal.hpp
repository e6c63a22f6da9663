#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cointersect/graph.hpp"
#include "cointersect/representation.hpp"

namespace coint {

struct AnnealParams {
  int alpha = 1;
  int beta = 1;
  double c = 10.0;  // mixing exponent
  double b = 50.0;  // rounds multiplier: N = ceil(b n ln n)
  std::optional<std::int64_t> rounds;  // explicit N, overrides b
  std::uint64_t seed = 0;
  std::int64_t trace_every = 0;  // 0 disables the trace
  bool stop_when_perfect = true;
};

struct TracePoint {
  std::int64_t round = 0;
  std::int64_t current = 0;
  std::int64_t best = 0;
};

struct AnnealResult {
  Cir best;
  Score best_score;
  std::uint64_t seed = 0;
  std::int64_t rounds = 0;       // rounds scheduled
  std::int64_t rounds_run = 0;   // rounds executed before a perfect score stopped the run
  std::int64_t accepted = 0;
  std::vector<TracePoint> trace;
};

/// Every A_v and B_v drawn uniformly from the nonempty subsets, vertex by vertex.
/// Requires alpha, beta <= 64.
Cir random_cir(int n, int alpha, int beta, std::uint64_t seed);

/// max(1, ceil(b n ln n)).
std::int64_t default_rounds(int n, double b);

/// min(1, e^{c delta}); improving moves always pass.
double acceptance_probability(double c, std::int64_t delta);

/// Single-vertex resampling with acceptance probability min(1, e^{c delta}).
/// Every A_v and B_v stays nonempty. Requires alpha, beta <= 64.
AnnealResult anneal(const Graph& g, const AnnealParams& p);

/// Runs seeds p.seed + r for r in [0, restarts), in parallel when threads != 1.
std::vector<AnnealResult> anneal_runs(const Graph& g, const AnnealParams& p, int restarts, int threads = 0);

/// Best of anneal_runs; ties go to the lowest seed.
AnnealResult multi_restart(const Graph& g, const AnnealParams& p, int restarts, int threads = 0);

}  // namespace coint
