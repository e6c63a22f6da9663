#pragma once

#include <vector>

#include "cointersect/graph.hpp"

namespace coint {

using Clique = std::vector<int>;

/// All maximal cliques with at least one edge, each sorted, in lexicographic
/// order. Bron-Kerbosch with Tomita pivoting over bitset rows.
std::vector<Clique> maximal_cliques(const Graph& g);

/// Repeatedly grows a maximal clique around the first uncovered edge.
std::vector<Clique> greedy_clique_cover(const Graph& g);

/// Minimum edge clique cover by branch and bound over maximal cliques.
std::vector<Clique> minimum_clique_cover(const Graph& g);

}  // namespace coint
