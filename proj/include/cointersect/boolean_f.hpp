#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cointersect/anneal.hpp"
#include "cointersect/feature_set.hpp"
#include "cointersect/graph.hpp"
#include "cointersect/representation.hpp"

namespace coint {

struct Literal {
  int var = 0;  // 0-based; rendered as x<var+1>
  bool negated = false;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of conjunctions over variables x1..xr.
struct DnfFormula {
  int r = 0;
  std::vector<std::vector<Literal>> clauses;  // each sorted by variable
  bool monotone = true;
  std::vector<std::string> warnings;  // clauses dropped while normalizing

  /// Longest clause.
  int s() const;
  bool eval(const std::vector<bool>& x) const;
};

struct DnfOptions {
  bool require_full = false;  // every clause must mention every variable
  std::optional<int> arity;   // r; defaults to the largest index used
};

/// Grammar: clauses separated by '|', literals by '&', literal = ['!'] 'x' index
/// (1-based); a clause may be wrapped in parentheses; whitespace is ignored.
/// Monotone formulas drop clauses that contain another clause.
DnfFormula parse_dnf(std::string_view text, const DnfOptions& options = {});
std::string render_dnf(const DnfFormula& f);

/// Vertex v holds one subset of alphabet i for every i < r.
struct GeneralAssignment {
  std::vector<int> sizes;
  std::vector<std::vector<FeatureSet>> sets;  // sets[v][i]

  int vertex_count() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const GeneralAssignment&, const GeneralAssignment&) = default;
};

void check_well_formed(const GeneralAssignment& asg);
GeneralAssignment from_cir(const Cir& r);

/// f evaluated on x_i = [A^i_u meets A^i_v].
bool f_linked(const GeneralAssignment& asg, const DnfFormula& f, int u, int v);
std::vector<Edge> verify_f(const Graph& g, const GeneralAssignment& asg, const DnfFormula& f);
Score score_f(const Graph& g, const GeneralAssignment& asg, const DnfFormula& f);

struct AnnealFResult {
  GeneralAssignment best;
  Score best_score;
  std::int64_t rounds = 0;
};

/// The annealer with score_f; each round resamples the whole tuple of one vertex.
/// Uses seed, c, b, rounds and stop_when_perfect from params.
AnnealFResult anneal_f(const Graph& g, const DnfFormula& f, const std::vector<int>& sizes, const AnnealParams& params);

/// Sum over clauses of the product of their alphas. Monotone formulas only.
std::int64_t g_f(const DnfFormula& f, const std::vector<int>& alphas);

struct IpBound {
  std::int64_t value = 0;
  std::vector<int> alphas;
};

/// min sum(alpha) subject to g_f(alpha) >= theta1, alpha_i in [1, cap]. Totals
/// are tried in increasing order and compositions lexicographically, so the
/// witness is the lexicographically smallest optimum. cap defaults to 1+theta1.
IpBound ip_lower_bound(const DnfFormula& f, int theta1, std::optional<int> cap = std::nullopt);

}  // namespace coint
