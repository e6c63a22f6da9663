#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cointersect/cliques.hpp"
#include "cointersect/constructions.hpp"
#include "cointersect/graph.hpp"
#include "cointersect/representation.hpp"

// Worked examples, translated once to 0-based vertices and feature labels.
namespace coint::fixtures {

/// Triangle {0,1,2} plus edges (2,3), (2,4), and its three-clique cover.
Graph cricket_graph();
std::vector<Clique> cricket_cover();

/// Five people: triangle {0,1,2}, then 2-3 and 3-4; a (2,2)-representation.
Graph tadpole_graph();
Cir tadpole_cir();

/// Twelve-vertex synthetic graph, its generating (4,5)-assignment and the
/// known (3,5)-witness. synth12_original() keeps the uncorrected generating
/// column, which differs from the corrected one at vertex 0.
Graph synth12_graph();
Cir synth12_generating();
Cir synth12_witness();
Cir synth12_original();

Cir p5_unique();
Cir c4_unique();
Cir p13_zigzag();
Cir c9_corrected();
Cir k66_groups();
Cir km22();
Cir km33();
std::pair<Cir, Cir> p7_pair();

ResolvablePacking affine3_packing();
ResolvablePacking grid4_packing();

/// Political support: 0 for the instructor's side, 1 for the officer's.
std::vector<int> karate_factions();

/// Club joined after the split; differs from the factions at member 8 only.
std::vector<int> karate_clubs();

/// Lookup by name for the command line.
std::vector<std::string_view> names();
std::optional<Graph> graph(std::string_view name);
std::optional<Cir> cir(std::string_view name);

}  // namespace coint::fixtures
