#include <doctest.h>

#include <array>
#include <cmath>

#include "cointersect/anneal.hpp"
#include "cointersect/error.hpp"
#include "cointersect/fixtures.hpp"
#include "cointersect/rng.hpp"
#include "oracles.hpp"

using namespace coint;

TEST_CASE("generator reference values") {
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xe220a8397b1dcdafULL);
  CHECK(sm.next() == 0x6e789e6aa1b965f4ULL);
  Rng rng(42);
  CHECK(rng.next() == 0x15780b2e0c2ec716ULL);
  CHECK(rng.next() == 0x6104d9866d113a7eULL);
  CHECK(rng.next() == 0xae17533239e499a1ULL);
}

TEST_CASE("bounded draws") {
  Rng rng(3);
  std::array<int, 7> counts{};
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const std::uint64_t m = rng.nonempty_mask(3);
    REQUIRE(m >= 1);
    REQUIRE(m <= 7);
    ++counts[m - 1];
  }
  double chi2 = 0;
  for (int c : counts) chi2 += (c - draws / 7.0) * (c - draws / 7.0) / (draws / 7.0);
  CHECK(chi2 < 22.5);  // 6 degrees of freedom, p ~ 0.001
  for (int i = 0; i < 1000; ++i) {
    CHECK(rng.uniform(5) < 5);
    const double d = rng.uniform_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    CHECK(rng.nonempty_mask(64) != 0);
  }
  CHECK(rng.nonempty_mask(1) == 1);
  CHECK_THROWS_AS(rng.uniform(0), DomainError);
  CHECK_THROWS_AS(rng.nonempty_mask(0), DomainError);
}

TEST_CASE("default number of rounds") {
  CHECK(default_rounds(13, 50) == static_cast<std::int64_t>(std::ceil(50 * 13 * std::log(13.0))));
  CHECK(default_rounds(1, 50) == 1);
  CHECK(default_rounds(2, 0.001) == 1);
}

TEST_CASE("acceptance frequency tracks e^{c delta}") {
  Rng rng(2024);
  constexpr int trials = 100000;
  for (double c : {0.5, 10.0}) {
    for (std::int64_t delta : {-3, -2, -1, 0, 1, 4}) {
      const double expect = delta >= 0 ? 1.0 : std::exp(c * static_cast<double>(delta));
      CHECK(acceptance_probability(c, delta) == doctest::Approx(expect));
      int hits = 0;
      for (int i = 0; i < trials; ++i) hits += rng.uniform_double() < acceptance_probability(c, delta);
      const double freq = static_cast<double>(hits) / trials;
      const double se = std::sqrt(expect * (1 - expect) / trials);
      INFO("c=" << c << " delta=" << delta << " freq=" << freq);
      CHECK(std::abs(freq - expect) <= 3 * se + 1e-12);
    }
  }
}

TEST_CASE("random assignments are reproducible and nonempty") {
  const Cir a = random_cir(12, 4, 5, 9);
  CHECK(a == random_cir(12, 4, 5, 9));
  CHECK_FALSE(a == random_cir(12, 4, 5, 10));
  for (int v = 0; v < 12; ++v) {
    CHECK_FALSE(a.a[v].empty());
    CHECK_FALSE(a.b[v].empty());
  }
  CHECK_THROWS_AS(random_cir(3, 65, 1, 0), DomainError);
}

TEST_CASE("annealing basics") {
  const Graph g = families::path(13);
  AnnealParams p;
  p.alpha = 3;
  p.beta = 4;
  p.seed = 5;
  p.trace_every = 50;
  const AnnealResult r = anneal(g, p);
  CHECK(r.rounds == default_rounds(13, 50));
  CHECK(r.rounds_run <= r.rounds);
  CHECK(r.best_score.matched == oracle::matched_pairs(g, r.best));
  CHECK(r.best_score.total == 78);
  for (int v = 0; v < 13; ++v) {
    CHECK_FALSE(r.best.a[v].empty());
    CHECK_FALSE(r.best.b[v].empty());
  }
  std::int64_t last = -1;
  for (const auto& t : r.trace) {
    CHECK(t.best >= last);
    CHECK(t.current <= t.best);
    last = t.best;
  }
  if (r.best_score.perfect()) CHECK(verify(g, r.best).empty());

  const AnnealResult again = anneal(g, p);
  CHECK(again.best == r.best);
  CHECK(again.accepted == r.accepted);
}

TEST_CASE("early stop") {
  const Graph g = families::complete(5);
  AnnealParams p;
  p.alpha = 1;
  p.beta = 1;
  p.rounds = 100;
  const AnnealResult stopped = anneal(g, p);
  CHECK(stopped.best_score.perfect());
  CHECK(stopped.rounds_run == 0);
  p.stop_when_perfect = false;
  CHECK(anneal(g, p).rounds_run == 100);
}

TEST_CASE("alpha = 1 keeps every A-set at the single label") {
  const Graph g = families::cycle(7);
  AnnealParams p;
  p.alpha = 1;
  p.beta = 7;
  p.rounds = 2000;
  p.seed = 1;
  const AnnealResult r = anneal(g, p);
  for (int v = 0; v < 7; ++v) CHECK(r.best.a[v] == FeatureSet(1, {0}));
  // The score reduces to the intersection score of the B-sets alone.
  std::int64_t matched = 0;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) matched += r.best.b[u].intersects(r.best.b[v]) == g.adjacent(u, v);
  CHECK(r.best_score.matched == matched);
}

TEST_CASE("parameter validation") {
  const Graph g = families::path(4);
  AnnealParams p;
  p.rounds = 0;
  CHECK_THROWS_AS(anneal(g, p), DomainError);
  p.rounds = 10;
  p.alpha = 65;
  CHECK_THROWS_AS(anneal(g, p), DomainError);
  p.alpha = 2;
  p.c = 0;
  CHECK_THROWS_AS(anneal(g, p), DomainError);
  CHECK_THROWS_AS(anneal(Graph(0), AnnealParams{}), DomainError);
  CHECK_THROWS_AS(anneal_runs(g, AnnealParams{}, 0), DomainError);
}

TEST_CASE("restarts are seed-indexed and thread-independent") {
  const Graph g = graph_from_assignment(fixtures::synth12_generating());
  AnnealParams p;
  p.alpha = 3;
  p.beta = 5;
  p.seed = 100;
  p.rounds = 500;
  const auto serial = anneal_runs(g, p, 6, 1);
  const auto parallel = anneal_runs(g, p, 6, 4);
  REQUIRE(serial.size() == 6);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].seed == 100 + i);
    CHECK(serial[i].best == parallel[i].best);
    AnnealParams single = p;
    single.seed = 100 + i;
    CHECK(anneal(g, single).best == serial[i].best);
  }
  const AnnealResult best = multi_restart(g, p, 6, 2);
  std::int64_t top = 0;
  for (const auto& r : serial) top = std::max(top, r.best_score.matched);
  CHECK(best.best_score.matched == top);
  for (const auto& r : serial) {
    if (r.best_score.matched == top) {
      CHECK(best.seed == r.seed);  // lowest seed among the ties
      break;
    }
  }
}
