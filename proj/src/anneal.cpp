#include "cointersect/anneal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "cointersect/error.hpp"
#include "cointersect/kernels.hpp"
#include "cointersect/rng.hpp"

namespace coint {

double acceptance_probability(double c, std::int64_t delta) {
  if (delta >= 0) return 1.0;
  return std::exp(c * static_cast<double>(delta));
}

std::int64_t default_rounds(int n, double b) {
  if (n < 2) return 1;
  const double value = std::ceil(b * n * std::log(static_cast<double>(n)));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(value));
}

namespace {

void check_params(const Graph& g, const AnnealParams& p) {
  if (g.n() < 1) throw DomainError("anneal needs at least one vertex");
  if (p.alpha < 1 || p.beta < 1) throw DomainError("feature alphabets must be nonempty");
  if (p.alpha > 64 || p.beta > 64) throw DomainError("anneal supports alphabets of at most 64 features");
  if (!(p.c > 0)) throw DomainError("mixing exponent c must be positive");
  if (p.rounds && *p.rounds < 1) throw DomainError("rounds must be at least 1");
  if (!p.rounds && !(p.b > 0)) throw DomainError("rounds multiplier b must be positive");
}

Cir to_cir(int alpha, int beta, const std::vector<std::uint64_t>& am, const std::vector<std::uint64_t>& bm) {
  Cir r;
  r.alpha = alpha;
  r.beta = beta;
  for (std::size_t v = 0; v < am.size(); ++v) {
    r.a.push_back(FeatureSet::from_mask(alpha, am[v]));
    r.b.push_back(FeatureSet::from_mask(beta, bm[v]));
  }
  return r;
}

}  // namespace

Cir random_cir(int n, int alpha, int beta, std::uint64_t seed) {
  if (n < 0) throw DomainError("random_cir: n must be nonnegative");
  if (alpha < 1 || beta < 1 || alpha > 64 || beta > 64) throw DomainError("random_cir: alphabets must be in [1, 64]");
  Rng rng(seed);
  std::vector<std::uint64_t> am(n);
  std::vector<std::uint64_t> bm(n);
  for (int v = 0; v < n; ++v) {
    am[v] = rng.nonempty_mask(alpha);
    bm[v] = rng.nonempty_mask(beta);
  }
  return to_cir(alpha, beta, am, bm);
}

AnnealResult anneal(const Graph& g, const AnnealParams& p) {
  check_params(g, p);
  const int n = g.n();
  const std::int64_t rounds = p.rounds ? *p.rounds : default_rounds(n, p.b);
  Rng rng(p.seed);

  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  auto row = [&](int u) { return std::span<const std::uint8_t>(adj).subspan(static_cast<std::size_t>(u) * n, n); };

  std::vector<std::uint64_t> am(n);
  std::vector<std::uint64_t> bm(n);
  for (int v = 0; v < n; ++v) {
    am[v] = rng.nonempty_mask(p.alpha);
    bm[v] = rng.nonempty_mask(p.beta);
  }
  std::int64_t twice = 0;
  for (int u = 0; u < n; ++u) twice += static_cast<std::int64_t>(kernels::row_matches_excluding(am, bm, row(u), am[u], bm[u], u));
  std::int64_t current = twice / 2;
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;

  AnnealResult result;
  result.seed = p.seed;
  result.rounds = rounds;
  std::vector<std::uint64_t> best_a = am;
  std::vector<std::uint64_t> best_b = bm;
  std::int64_t best = current;

  std::int64_t round = 0;
  while (round < rounds) {
    if (p.stop_when_perfect && best == total) break;
    ++round;
    const int u = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    const std::uint64_t qa = rng.nonempty_mask(p.alpha);
    const std::uint64_t qb = rng.nonempty_mask(p.beta);
    const auto r = row(u);
    const auto before = static_cast<std::int64_t>(kernels::row_matches_excluding(am, bm, r, am[u], bm[u], u));
    const auto after = static_cast<std::int64_t>(kernels::row_matches_excluding(am, bm, r, qa, qb, u));
    const std::int64_t delta = after - before;
    const double draw = rng.uniform_double();
    if (draw < acceptance_probability(p.c, delta)) {
      am[u] = qa;
      bm[u] = qb;
      current += delta;
      ++result.accepted;
      if (current > best) {
        best = current;
        best_a = am;
        best_b = bm;
      }
    }
    if (p.trace_every > 0 && (round % p.trace_every == 0 || round == rounds)) {
      result.trace.push_back({round, current, best});
    }
  }
  result.rounds_run = round;
  result.best = to_cir(p.alpha, p.beta, best_a, best_b);
  result.best_score = score(g, result.best);
  if (result.best_score.matched != best) throw InternalError("incremental score drifted from the full rescore");
  return result;
}

std::vector<AnnealResult> anneal_runs(const Graph& g, const AnnealParams& p, int restarts, int threads) {
  if (restarts < 1) throw DomainError("restarts must be at least 1");
  check_params(g, p);
  std::vector<AnnealResult> out(restarts);
  const int workers = std::min(restarts, threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= restarts) return;
      AnnealParams q = p;
      q.seed = p.seed + static_cast<std::uint64_t>(r);
      out[r] = anneal(g, q);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (int w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  return out;
}

AnnealResult multi_restart(const Graph& g, const AnnealParams& p, int restarts, int threads) {
  auto runs = anneal_runs(g, p, restarts, threads);
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].best_score.matched > runs[best].best_score.matched) best = r;
  return std::move(runs[best]);
}

}  // namespace coint
