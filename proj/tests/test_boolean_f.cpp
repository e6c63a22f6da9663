#include <doctest.h>

#include <cmath>

#include "cointersect/anneal.hpp"
#include "cointersect/boolean_f.hpp"
#include "cointersect/bounds.hpp"
#include "cointersect/error.hpp"
#include "cointersect/fixtures.hpp"
#include "cointersect/rng.hpp"

using namespace coint;

namespace {

// min sum over the box [1, cap]^r, scanning every vector.
std::int64_t brute_ip(const std::vector<std::vector<int>>& clauses, int r, int theta1, int cap) {
  std::vector<int> a(r, 1);
  std::int64_t best = -1;
  for (;;) {
    std::int64_t g = 0;
    for (const auto& c : clauses) {
      std::int64_t prod = 1;
      for (int v : c) prod *= a[v];
      g += prod;
    }
    std::int64_t sum = 0;
    for (int x : a) sum += x;
    if (g >= theta1 && (best < 0 || sum < best)) best = sum;
    int i = 0;
    while (i < r && a[i] == cap) a[i++] = 1;
    if (i == r) break;
    ++a[i];
  }
  return best;
}

}  // namespace

TEST_CASE("parsing and rendering") {
  const DnfFormula f = parse_dnf("x1 | (x2 & x3)");
  CHECK(f.r == 3);
  CHECK(f.s() == 2);
  CHECK(f.monotone);
  CHECK(render_dnf(f) == "x1 | x2 & x3");
  CHECK(render_dnf(parse_dnf(render_dnf(f))) == render_dnf(f));

  const DnfFormula neg = parse_dnf("  !x2&x1 |x3 ");
  CHECK_FALSE(neg.monotone);
  CHECK(render_dnf(neg) == "x1 & !x2 | x3");

  for (const char* bad : {"", "x0", "x1 |", "x1 & & x2", "(x1 | x2)", "y1", "x1 x2", "x1 & (x2"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_dnf(bad), DomainError);
  }
}

TEST_CASE("normalization") {
  const DnfFormula f = parse_dnf("x1 & x2 | x1 | x2 & x3");
  CHECK(render_dnf(f) == "x1 | x2 & x3");
  CHECK(f.warnings.size() == 1);
  const DnfFormula g = parse_dnf("x1 & !x1 | x2");
  CHECK(render_dnf(g) == "x2");
  CHECK(g.warnings.size() == 1);
  CHECK_THROWS_AS(parse_dnf("x1 & !x1"), DomainError);
}

TEST_CASE("arity and full clauses") {
  DnfOptions o;
  o.arity = 4;
  CHECK(parse_dnf("x1 & x2", o).r == 4);
  o.arity = 1;
  CHECK_THROWS_AS(parse_dnf("x1 & x2", o), DomainError);
  DnfOptions full;
  full.require_full = true;
  CHECK_NOTHROW(parse_dnf("x1 & x2 | !x1 & x2", full));
  CHECK_THROWS_AS(parse_dnf("x1 | x1 & x2", full), DomainError);
}

TEST_CASE("evaluation") {
  const DnfFormula maj = parse_dnf("x1 & x2 | x1 & x3 | x2 & x3");
  for (int m = 0; m < 8; ++m) {
    const std::vector<bool> x{bool(m & 1), bool(m & 2), bool(m & 4)};
    CHECK(maj.eval(x) == (x[0] + x[1] + x[2] >= 2));
  }
}

TEST_CASE("AND formula agrees with the two-alphabet check") {
  const DnfFormula f = parse_dnf("x1 & x2");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Cir r = random_cir(8, 3, 3, seed);
    const Graph g = graph_from_assignment(random_cir(8, 3, 3, seed + 500));
    CHECK(verify_f(g, from_cir(r), f) == verify(g, r));
    CHECK(score_f(g, from_cir(r), f) == score(g, r));
  }
}

TEST_CASE("general assignments") {
  GeneralAssignment asg = from_cir(fixtures::tadpole_cir());
  CHECK(asg.sizes == std::vector<int>{2, 2});
  CHECK_NOTHROW(check_well_formed(asg));
  asg.sets[0].pop_back();
  CHECK_THROWS_AS(check_well_formed(asg), DomainError);
  const GeneralAssignment ok = from_cir(fixtures::tadpole_cir());
  CHECK_THROWS_AS(verify_f(fixtures::tadpole_graph(), ok, parse_dnf("x1 & x2 & x3")), DomainError);
  CHECK(f_linked(ok, parse_dnf("x1 & x2"), 0, 1));
  CHECK_FALSE(f_linked(ok, parse_dnf("x1 & x2"), 0, 3));
  CHECK(f_linked(ok, parse_dnf("x1 | x2"), 0, 3));  // B-sets {0,1} and {0,1} meet
}

TEST_CASE("g_f") {
  const DnfFormula f = parse_dnf("x1 | x2 & x3");
  CHECK(g_f(f, {1, 2, 2}) == 5);
  CHECK(g_f(f, {3, 1, 4}) == 7);
  CHECK_THROWS_AS(g_f(parse_dnf("!x1 | x2"), {1, 1}), DomainError);
  CHECK_THROWS_AS(g_f(f, {1, 2}), DomainError);
  // Monotone in every coordinate.
  const DnfFormula maj = parse_dnf("x1 & x2 | x1 & x3 | x2 & x3");
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c) {
        CHECK(g_f(maj, {a + 1, b, c}) >= g_f(maj, {a, b, c}));
        CHECK(g_f(maj, {a, b + 1, c}) >= g_f(maj, {a, b, c}));
        CHECK(g_f(maj, {a, b, c + 1}) >= g_f(maj, {a, b, c}));
      }
}

TEST_CASE("integer bound examples") {
  const IpBound one = ip_lower_bound(parse_dnf("x1 | x2 & x3"), 5);
  CHECK(one.value == 5);
  CHECK(one.alphas == std::vector<int>{1, 2, 2});
  const IpBound maj = ip_lower_bound(parse_dnf("x1 & x2 | x1 & x3 | x2 & x3"), 12);
  CHECK(maj.value == 6);
  CHECK(maj.alphas == std::vector<int>{2, 2, 2});
  for (int k = 1; k <= 30; ++k) CHECK(ip_lower_bound(parse_dnf("x1"), k).value == k);
  CHECK_THROWS_AS(ip_lower_bound(parse_dnf("!x1 | x2"), 4), DomainError);
}

TEST_CASE("AND bound reproduces the two-alphabet lower bound") {
  const DnfFormula f = parse_dnf("x1 & x2");
  for (int t = 1; t <= 1000; ++t) CHECK(ip_lower_bound(f, t).value == thetac_lower(t));
}

TEST_CASE("integer bound equals a full box scan") {
  const std::vector<std::pair<const char*, std::vector<std::vector<int>>>> formulas{
      {"x1 | x2 & x3", {{0}, {1, 2}}},
      {"x1 & x2 | x1 & x3 | x2 & x3", {{0, 1}, {0, 2}, {1, 2}}},
      {"x1 & x2 & x3", {{0, 1, 2}}},
      {"x1 & x2 | x3 & x4", {{0, 1}, {2, 3}}}};
  for (const auto& [text, clauses] : formulas) {
    const DnfFormula f = parse_dnf(text);
    for (int t = 1; t <= 40; ++t) {
      INFO(text << " theta1=" << t);
      CHECK(ip_lower_bound(f, t).value == brute_ip(clauses, f.r, t, t + 1));
    }
  }
}

TEST_CASE("annealing with a general formula") {
  const DnfFormula f = parse_dnf("x1 & x2");
  const Graph g = families::path(7);
  AnnealParams p;
  p.seed = 4;
  const AnnealFResult r = anneal_f(g, f, {2, 4}, p);
  CHECK(r.best_score == score_f(g, r.best, f));
  CHECK(r.best.sizes == std::vector<int>{2, 4});
  const AnnealFResult again = anneal_f(g, f, {2, 4}, p);
  CHECK(again.best == r.best);
  CHECK_THROWS_AS(anneal_f(g, f, {2}, p), DomainError);

  const DnfFormula three = parse_dnf("x1 & x2 | x3");
  const AnnealFResult t = anneal_f(g, three, {2, 3, 2}, p);
  CHECK(t.best_score == score_f(g, t.best, three));
}
