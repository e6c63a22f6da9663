#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cointersect/graph.hpp"
#include "cointersect/representation.hpp"

namespace coint {

/// Variable layout of the (alpha, beta) encoding, 1-based DIMACS indices:
///   x(u,a)  u-major, a-minor
///   y(u,b)  u-major, b-minor
///   A(e,a)  per edge in sorted order, a-minor
///   B(e,b)  per edge, b-minor
///   C(k)    per non-edge in lexicographic order
///   D(k)    per non-edge
struct VarMap {
  int n = 0;
  int alpha = 1;
  int beta = 1;
  std::vector<Edge> edges;
  std::vector<Edge> non_edges;

  int x(int u, int a) const { return 1 + u * alpha + a; }
  int y(int u, int b) const { return 1 + n * alpha + u * beta + b; }
  int a_var(int e, int a) const { return 1 + n * (alpha + beta) + e * alpha + a; }
  int b_var(int e, int b) const {
    return 1 + n * (alpha + beta) + static_cast<int>(edges.size()) * alpha + e * beta + b;
  }
  int c_var(int k) const { return 1 + n * (alpha + beta) + static_cast<int>(edges.size()) * (alpha + beta) + k; }
  int d_var(int k) const { return c_var(k) + static_cast<int>(non_edges.size()); }
  int var_count() const { return d_var(0) - 1 + static_cast<int>(non_edges.size()); }
};

struct CnfInstance {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;  // signed DIMACS literals
  VarMap map;
};

/// Satisfiable iff g has an (alpha, beta)-representation.
CnfInstance encode(const Graph& g, int alpha, int beta);

/// DIMACS text; comment lines document the variable layout.
std::string export_dimacs(const CnfInstance& c);

/// Model as values[1..var_count] (index 0 unused).
using Model = std::vector<bool>;

bool satisfies(const CnfInstance& c, const Model& model);

/// Reads a solver answer: optional "s SATISFIABLE" line, then "v" lines (or bare
/// integer lines) of signed literals ending in 0. Unlisted variables are false.
/// Throws DomainError when the model violates any clause.
Model import_model(std::string_view text, const CnfInstance& c);

/// A_v = {a : x(v,a)}, B_v = {b : y(v,b)}. Throws InternalError if the result
/// does not represent g.
Cir decode(const Model& model, const Graph& g, const VarMap& map);

}  // namespace coint
