#include <doctest.h>

#include "cointersect/bounds.hpp"
#include "cointersect/cliques.hpp"
#include "cointersect/constructions.hpp"
#include "cointersect/fixtures.hpp"
#include "oracles.hpp"

using namespace coint;

TEST_CASE("every named fixture loads and its assignment represents its graph") {
  for (auto name : fixtures::names()) {
    INFO(name);
    const auto g = fixtures::graph(name);
    REQUIRE(g.has_value());
    if (auto r = fixtures::cir(name)) CHECK(oracle::represents(*g, *r));
  }
  CHECK_FALSE(fixtures::graph("nope").has_value());
}

TEST_CASE("worked example graphs") {
  const Graph g1 = fixtures::cricket_graph();
  CHECK(g1.edge_count() == 5);
  CHECK(oracle::represents(fixtures::tadpole_graph(), fixtures::tadpole_cir()));
  CHECK(theta1_exact(fixtures::tadpole_graph()) == 3);
}

TEST_CASE("twelve-vertex synthetic columns") {
  const Graph g = fixtures::synth12_graph();
  CHECK(g.n() == 12);
  CHECK(oracle::represents(g, fixtures::synth12_generating()));
  CHECK(oracle::represents(g, fixtures::synth12_witness()));
  // The uncorrected generating column induces a different graph.
  CHECK_FALSE(oracle::represents(g, fixtures::synth12_original()));
  const Cir original = fixtures::synth12_original();
  const Cir fixed = fixtures::synth12_generating();
  for (int v = 1; v < 12; ++v) CHECK(original.a[v] == fixed.a[v]);
  CHECK(original.b == fixed.b);
}

TEST_CASE("bipartite complements of a matching") {
  CHECK(oracle::represents(families::knn_minus_matching(2), fixtures::km22()));
  CHECK(oracle::represents(families::knn_minus_matching(3), fixtures::km33()));
  CHECK(fixtures::km22().alpha + fixtures::km22().beta == 3);
  CHECK(fixtures::km33().alpha + fixtures::km33().beta == 5);
}

TEST_CASE("paths, cycles and bicliques from the constructions") {
  CHECK(oracle::represents(families::path(13), fixtures::p13_zigzag()));
  CHECK(oracle::represents(families::cycle(9), fixtures::c9_corrected()));
  CHECK(oracle::represents(families::complete_bipartite(6, 6), fixtures::k66_groups()));
  const auto [top, bottom] = fixtures::p7_pair();
  CHECK(oracle::represents(families::path(7), top));
  CHECK(oracle::represents(families::path(7), bottom));
  // Vertices 0 and 4 share nothing in one and a B-feature in the other.
  CHECK_FALSE(top.b[0].intersects(top.b[4]));
  CHECK(bottom.b[0].intersects(bottom.b[4]));
}

TEST_CASE("karate factions") {
  const auto f = fixtures::karate_factions();
  REQUIRE(f.size() == 34);
  int hi = 0;
  for (int x : f) hi += x == 0;
  CHECK(hi == 16);
  CHECK(f[0] == 0);
  CHECK(f[33] == 1);
  const auto c = fixtures::karate_clubs();
  int diff = 0;
  for (int v = 0; v < 34; ++v) diff += f[v] != c[v];
  CHECK(diff == 1);
  CHECK(c[8] == 0);
}
