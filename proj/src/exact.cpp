#include "cointersect/exact.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <memory>
#include <thread>

#include "cointersect/bounds.hpp"
#include "cointersect/error.hpp"

namespace coint {

std::vector<std::pair<int, int>> feasible_splits(int total, int theta1) {
  std::vector<std::pair<int, int>> out;
  for (int alpha = 1; alpha <= total / 2; ++alpha) {
    const int beta = total - alpha;
    if (static_cast<long long>(alpha) * beta >= theta1) out.emplace_back(alpha, beta);
  }
  return out;
}

namespace {

struct TotalOutcome {
  bool sat = false;
  int alpha = 0;
  int beta = 0;
  Cir witness;
};

class Searcher {
 public:
  Searcher(const Graph& g, const ExactOptions& options, int theta1_lower, ExactResult& result)
      : g_(g), options_(options), theta1_lower_(theta1_lower), result_(result) {
    if (options.timeout) deadline_ = std::chrono::steady_clock::now() + *options.timeout;
    threads_ = options.threads > 0 ? options.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }

  TotalOutcome probe_total(int total) {
    TotalOutcome out;
    const auto splits = feasible_splits(total, theta1_lower_);
    if (splits.empty()) {
      result_.pruned_totals.push_back(total);
      return out;
    }
    const std::size_t k = splits.size();
    std::vector<CnfInstance> instances;
    instances.reserve(k);
    for (auto [a, b] : splits) {
      instances.push_back(encode(g_, a, b));
      if (options_.on_encode) options_.on_encode(instances.back());
    }

    std::vector<SolveResult> results(k);
    auto cancel = std::make_unique<std::atomic<bool>[]>(k);
    for (std::size_t i = 0; i < k; ++i) cancel[i] = false;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= k) return;
        if (cancel[i]) continue;
        SolveLimits limits;
        limits.deadline = deadline_;
        limits.cancel = &cancel[i];
        results[i] = solve(instances[i], limits);
        if (results[i].status == SatStatus::sat) {
          // Larger alpha can no longer be the reported split.
          for (std::size_t j = i + 1; j < k; ++j) cancel[j] = true;
        }
      }
    };
    const int workers = std::min<int>(threads_, static_cast<int>(k));
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::future<void>> pool;
      for (int w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
      for (auto& f : pool) f.get();
    }

    for (std::size_t i = 0; i < k; ++i) {
      const auto& r = results[i];
      result_.probes.push_back({total, splits[i].first, splits[i].second, r.status, r.stats.conflicts});
      if (out.sat) continue;
      if (r.status == SatStatus::unknown) {
        throw LimitError("exact search: probe (" + std::to_string(splits[i].first) + "," +
                         std::to_string(splits[i].second) + ") at total " + std::to_string(total) +
                         " hit the resource limit");
      }
      if (r.status == SatStatus::sat) {
        out.sat = true;
        out.alpha = splits[i].first;
        out.beta = splits[i].second;
        out.witness = decode(r.model, g_, instances[i].map);
      }
    }
    // Probes after the winner were possibly cancelled; drop their records.
    if (out.sat) {
      auto& p = result_.probes;
      p.erase(std::remove_if(p.begin(), p.end(),
                             [&](const Probe& pr) { return pr.total == total && pr.alpha > out.alpha; }),
              p.end());
    }
    return out;
  }

 private:
  const Graph& g_;
  const ExactOptions& options_;
  int theta1_lower_;
  ExactResult& result_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  int threads_ = 1;
};

}  // namespace

ExactResult theta_c_exact(const Graph& g, const ExactOptions& options) {
  ExactResult result;
  int theta1_lower = 0;
  int theta1_upper = 0;
  if (options.theta1) {
    if (*options.theta1 < 0) throw DomainError("theta1 must be nonnegative");
    theta1_lower = theta1_upper = *options.theta1;
    result.theta1_exact = true;
  } else {
    try {
      theta1_lower = theta1_upper = theta1_exact(g);
      result.theta1_exact = true;
    } catch (const LimitError&) {
      theta1_upper = theta1_greedy(g);
    }
  }
  result.theta1 = theta1_upper;

  // Both alphabets are nonempty, so every representation has total >= 2.
  int lo = std::max(2, thetac_lower(theta1_lower));
  std::int64_t best_upper = std::numeric_limits<std::int64_t>::max();
  for (const auto& u : thetac_upper_bounds(g, theta1_upper))
    if (u.applicable) best_upper = std::min(best_upper, u.ceiling);
  int hi = static_cast<int>(std::max<std::int64_t>(lo, best_upper));
  result.lower = lo;
  result.upper = hi;

  // Padding a witness with an unused feature keeps it valid, so feasibility is
  // monotone in the total and binary search is sound.
  Searcher searcher(g, options, theta1_lower, result);
  std::optional<TotalOutcome> best;
  int best_total = 0;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    auto outcome = searcher.probe_total(mid);
    if (outcome.sat) {
      best = std::move(outcome);
      best_total = mid;
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (!best || best_total != lo) {
    auto outcome = searcher.probe_total(lo);
    if (!outcome.sat) {
      throw InternalError("exact search: no representation at the upper bound " + std::to_string(lo));
    }
    best = std::move(outcome);
  }
  result.theta_c = lo;
  result.alpha = best->alpha;
  result.beta = best->beta;
  result.witness = std::move(best->witness);
  return result;
}

}  // namespace coint
