#include <doctest.h>

#include "cointersect/error.hpp"
#include "cointersect/graph.hpp"
#include "oracles.hpp"

using namespace coint;

TEST_CASE("edge list round trip") {
  for (const Graph& g : {families::path(7), families::cycle(9), families::complete(5), families::star(6),
                         families::complete_bipartite(3, 4), families::knn_minus_matching(5), families::karate(),
                         Graph(4)}) {
    CHECK(parse_edge_list(render_edge_list(g)) == g);
  }
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# comment\nn 6\n0 1\n1 0\n2 3\n\n");
  CHECK(g.n() == 6);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(5) == 0);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), DomainError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), DomainError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), DomainError);
}

TEST_CASE("family sizes") {
  CHECK(families::complete(6).edge_count() == 15);
  for (int n = 1; n <= 6; ++n) CHECK(families::complete_bipartite(n, n).edge_count() == static_cast<std::size_t>(n * n));
  const std::vector<int> parts{2, 2, 2};
  CHECK(families::complete_multipartite(parts).edge_count() == 12);
  const Graph k = families::karate();
  CHECK(k.n() == 34);
  CHECK(k.edge_count() == 78);
  CHECK(k.degree(0) == 16);
  CHECK(k.degree(33) == 17);
}

TEST_CASE("K_{n,n} minus a matching is triangle-free and regular") {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = families::knn_minus_matching(n);
    CHECK(is_triangle_free(g));
    for (int v = 0; v < 2 * n; ++v) CHECK(g.degree(v) == n - 1);
  }
}

TEST_CASE("complement and bipartition") {
  const Graph c5 = families::cycle(5);
  CHECK(complement(c5).edge_count() == 5);
  CHECK_FALSE(bipartition(c5).has_value());
  const Graph c6 = families::cycle(6);
  const auto side = bipartition(c6);
  REQUIRE(side.has_value());
  for (const auto& e : c6.edges()) CHECK((*side)[e.u] != (*side)[e.v]);
  CHECK(is_triangle_free(families::cycle(4)));
  CHECK_FALSE(is_triangle_free(families::complete(3)));
}

TEST_CASE("generate dispatches by name") {
  const auto f = family_from_name("complete_multipartite");
  REQUIRE(f.has_value());
  const std::vector<int> parts{1, 2, 3};
  CHECK(generate(*f, parts) == families::complete_multipartite(parts));
  CHECK_FALSE(family_from_name("petersen").has_value());
  const std::vector<int> none;
  CHECK_THROWS_AS(generate(Family::path, none), DomainError);
}

TEST_CASE("dot export lists every edge") {
  const std::string dot = to_dot(families::path(3));
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}
