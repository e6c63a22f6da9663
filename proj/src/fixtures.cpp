#include "cointersect/fixtures.hpp"

#include <initializer_list>

namespace coint::fixtures {
namespace {

using Sets = std::initializer_list<std::initializer_list<int>>;

Cir make(int alpha, int beta, Sets a, Sets b) {
  Cir r;
  r.alpha = alpha;
  r.beta = beta;
  for (const auto& s : a) r.a.emplace_back(alpha, s);
  for (const auto& s : b) r.b.emplace_back(beta, s);
  return r;
}

Graph from_edges(int n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> list(edges);
  return Graph(n, list);
}

}  // namespace

Graph cricket_graph() { return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}}); }

std::vector<Clique> cricket_cover() { return {{0, 1, 2}, {2, 3}, {2, 4}}; }

Graph tadpole_graph() { return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}); }

Cir tadpole_cir() {
  return make(2, 2, {{0}, {0}, {0, 1}, {1}, {1}}, {{0, 1}, {0}, {0}, {0, 1}, {1}});
}

// The original generating column has A_0 = {a0}; with that entry the (3,5)
// witness does not represent the generated graph. A_0 = {a2} is the only
// single-label choice under which both columns induce the same graph.
Cir synth12_original() {
  return make(4, 5,
              {{0}, {0, 2}, {2}, {2, 3}, {0}, {0, 3}, {1}, {2, 3}, {1}, {0, 1}, {1}, {2}},
              {{1}, {0, 2}, {1, 3}, {1, 3}, {2, 3}, {0, 3}, {2, 3}, {0, 3, 4}, {0, 1}, {1, 2}, {0, 3, 4}, {0, 1, 3}});
}

Cir synth12_generating() {
  return make(4, 5,
              {{2}, {0, 2}, {2}, {2, 3}, {0}, {0, 3}, {1}, {2, 3}, {1}, {0, 1}, {1}, {2}},
              {{1}, {0, 2}, {1, 3}, {1, 3}, {2, 3}, {0, 3}, {2, 3}, {0, 3, 4}, {0, 1}, {1, 2}, {0, 3, 4}, {0, 1, 3}});
}

Graph synth12_graph() { return graph_from_assignment(synth12_generating()); }

Cir synth12_witness() {
  return make(3, 5,
              {{2}, {0, 1, 2}, {2}, {2}, {0, 1}, {1, 2}, {0, 1}, {2}, {0, 1}, {0}, {1}, {2}},
              {{1}, {0, 2}, {1, 3}, {1, 4}, {2}, {2, 4}, {3}, {0, 3, 4}, {1}, {0, 1, 2, 3}, {1, 3}, {0, 1}});
}

Cir p5_unique() {
  return make(2, 2, {{0}, {0}, {0, 1}, {1}, {1}}, {{0}, {0, 1}, {1}, {0, 1}, {0}});
}

Cir c4_unique() {
  return make(2, 2, {{0, 1}, {0}, {0, 1}, {1}}, {{0}, {0, 1}, {1}, {0, 1}});
}

Cir p13_zigzag() {
  return make(3, 4,
              {{0}, {0}, {0}, {0}, {0, 1}, {1}, {1}, {1}, {1, 2}, {2}, {2}, {2}, {2}},
              {{0}, {0, 1}, {1, 2}, {2, 3}, {3}, {2, 3}, {1, 2}, {0, 1}, {0}, {0, 1}, {1, 2}, {2, 3}, {3}});
}

Cir c9_corrected() {
  return make(3, 3, {{0, 2}, {0}, {0}, {0, 1}, {1}, {1}, {1, 2}, {2}, {2}},
              {{0}, {0, 1}, {1, 2}, {2}, {0, 2}, {0, 1}, {1}, {1, 2}, {0, 2}});
}

Cir k66_groups() {
  Cir r = Cir::empty(12, 2, 18);
  for (int i = 0; i < 6; ++i) {
    r.a[i].insert(i / 3);
    for (int c = 0; c < 6; ++c) r.b[i].insert(6 * (i % 3) + c);
  }
  for (int j = 0; j < 6; ++j) {
    r.a[6 + j].insert(0);
    r.a[6 + j].insert(1);
    for (int row = 0; row < 3; ++row) r.b[6 + j].insert(6 * row + j);
  }
  return r;
}

Cir km22() { return make(1, 2, {{0}, {0}, {0}, {0}}, {{0}, {1}, {1}, {0}}); }

Cir km33() {
  return make(2, 3, {{0, 1}, {1}, {0}, {0, 1}, {0}, {1}}, {{0}, {1, 2}, {1, 2}, {2}, {0, 1}, {0, 1}});
}

std::pair<Cir, Cir> p7_pair() {
  Cir top = make(2, 3, {{0}, {0}, {0}, {0, 1}, {1}, {1}, {1}}, {{0}, {0, 1}, {1, 2}, {2}, {1, 2}, {0, 1}, {0}});
  Cir bottom = make(2, 3, {{0}, {0}, {0}, {0, 1}, {1}, {1}, {1}}, {{0}, {0, 1}, {1, 2}, {2}, {0, 2}, {0, 1}, {1}});
  return {top, bottom};
}

ResolvablePacking affine3_packing() {
  ResolvablePacking p;
  p.k = 3;
  p.classes = {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
               {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
               {{0, 4, 8}, {1, 5, 6}, {2, 3, 7}},
               {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}}};
  return p;
}

ResolvablePacking grid4_packing() {
  ResolvablePacking p;
  p.k = 4;
  p.classes = {{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}},
               {{0, 4, 8, 12}, {1, 5, 9, 13}, {2, 6, 10, 14}, {3, 7, 11, 15}},
               {{0, 5, 10, 15}, {1, 6, 11, 12}, {2, 7, 8, 13}, {3, 4, 9, 14}}};
  return p;
}

std::vector<int> karate_factions() {
  std::vector<int> f(34, 1);
  for (int v : {0, 1, 2, 3, 4, 5, 6, 7, 10, 11, 12, 13, 16, 17, 19, 21}) f[v] = 0;
  return f;
}

std::vector<int> karate_clubs() {
  auto f = karate_factions();
  // Member 8 backed the officer but stayed with the instructor's club.
  f[8] = 0;
  return f;
}

std::vector<std::string_view> names() {
  return {"cricket", "tadpole", "synth12", "synth12-witness", "p5", "c4", "p7-top", "p7-bottom",
          "p13",  "c9",   "k66",    "km22",            "km33"};
}

std::optional<Graph> graph(std::string_view name) {
  if (name == "cricket") return cricket_graph();
  if (name == "tadpole") return tadpole_graph();
  if (name == "synth12" || name == "synth12-witness") return synth12_graph();
  if (auto r = cir(name)) return graph_from_assignment(*r);
  return std::nullopt;
}

std::optional<Cir> cir(std::string_view name) {
  if (name == "tadpole") return tadpole_cir();
  if (name == "synth12") return synth12_generating();
  if (name == "synth12-witness") return synth12_witness();
  if (name == "p5") return p5_unique();
  if (name == "c4") return c4_unique();
  if (name == "p7-top") return p7_pair().first;
  if (name == "p7-bottom") return p7_pair().second;
  if (name == "p13") return p13_zigzag();
  if (name == "c9") return c9_corrected();
  if (name == "k66") return k66_groups();
  if (name == "km22") return km22();
  if (name == "km33") return km33();
  return std::nullopt;
}

}  // namespace coint::fixtures
