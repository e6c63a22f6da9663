#include "cointersect/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cointersect/cliques.hpp"
#include "cointersect/error.hpp"

namespace coint {

int theta1_exact(const Graph& g, int limit) {
  if (is_triangle_free(g)) return static_cast<int>(g.edge_count());
  if (g.n() > limit) {
    throw LimitError("theta1_exact: graph has " + std::to_string(g.n()) + " vertices, limit is " +
                     std::to_string(limit) + "; use theta1_greedy for an upper bound");
  }
  return static_cast<int>(minimum_clique_cover(g).size());
}

int theta1_greedy(const Graph& g) { return static_cast<int>(greedy_clique_cover(g).size()); }

int thetac_lower(int theta1) {
  if (theta1 < 0) throw DomainError("theta1 must be nonnegative");
  if (theta1 == 0) return 0;
  int best = std::numeric_limits<int>::max();
  const int top = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(theta1))));
  for (int alpha = 1; alpha <= top + 1; ++alpha) best = std::min(best, alpha + (theta1 + alpha - 1) / alpha);
  return best;
}

std::int64_t BoundsReport::best_upper() const {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& u : upper)
    if (u.applicable) best = std::min(best, u.ceiling);
  return best;
}

namespace {

// Alphabets are nonempty, so no representation uses fewer than two features.
std::int64_t usable(double value) {
  return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(value - 1e-9)));
}

}  // namespace

std::vector<UpperBound> thetac_upper_bounds(const Graph& g, int theta1, const BoundsOptions& options) {
  const int n = g.n();
  const int d = g.max_degree();
  std::vector<UpperBound> out;

  {
    UpperBound b{"one_plus_theta1", 1.0 + theta1, 0, true, "mirror of an edge clique cover"};
    b.ceiling = usable(b.value);
    out.push_back(b);
  }
  {
    const bool bip = bipartition(g).has_value();
    UpperBound b{"bipartite", static_cast<double>(n), 0, bip, bip ? "" : "graph is not bipartite"};
    b.ceiling = usable(b.value);
    out.push_back(b);
  }
  {
    const double value = 16.0 * std::pow(static_cast<double>(d), 2.5) * std::sqrt(static_cast<double>(n));
    UpperBound b{"bounded_degree", value, 0, d >= 1, d >= 1 ? "" : "no edges"};
    b.ceiling = usable(value);
    out.push_back(b);
  }
  {
    UpperBound b{"complement_sparse", 0.0, 0, false, "needs complement_degree"};
    if (options.complement_degree) {
      const int cd = *options.complement_degree;
      const double e2 = std::numbers::e * std::numbers::e;
      b.value = 1.0 + 2.0 * e2 * (cd + 1.0) * (cd + 1.0) * std::log(static_cast<double>(std::max(n, 1)));
      b.applicable = cd >= 0 && n >= 1 && g.min_degree() >= n - cd;
      b.note = b.applicable ? "" : "minimum degree below n - d";
    }
    b.ceiling = usable(b.value);
    out.push_back(b);
  }
  {
    UpperBound b{"chordal", 0.0, 0, false, "needs chordal_clique"};
    if (options.chordal_clique) {
      b.value = static_cast<double>(n - *options.chordal_clique + 2);
      b.applicable = true;
      b.note = "caller asserts chordality";
    }
    b.ceiling = usable(b.value);
    out.push_back(b);
  }
  return out;
}

BoundsReport thetac_bounds(const Graph& g, const BoundsOptions& options) {
  BoundsReport r;
  r.n = g.n();
  r.max_degree = g.max_degree();
  if (options.theta1) {
    r.theta1 = *options.theta1;
    r.theta1_exact = true;
  } else {
    try {
      r.theta1 = theta1_exact(g, options.exact_limit);
      r.theta1_exact = true;
    } catch (const LimitError&) {
      r.theta1 = theta1_greedy(g);
      r.theta1_exact = false;
    }
  }
  if (r.theta1_exact) {
    r.lower_thetac = thetac_lower(r.theta1);
  } else {
    // The greedy value only bounds theta1 from above. Below: no clique covers
    // more than omega choose 2 edges.
    std::size_t omega = 0;
    for (const Clique& c : maximal_cliques(g)) omega = std::max(omega, c.size());
    const std::size_t per = omega * (omega - 1) / 2;
    const std::size_t edges = g.edges().size();
    r.lower_thetac = per == 0 ? 0 : thetac_lower(static_cast<int>((edges + per - 1) / per));
  }
  r.upper = thetac_upper_bounds(g, r.theta1, options);
  return r;
}

double f_upper_bound(int d, int r, int s, int n) {
  if (d < 1 || r < 1 || s < 1 || n < 1 || s > r) throw DomainError("f_upper_bound needs d,r,s,n >= 1 and s <= r");
  const double sd = static_cast<double>(s);
  const double inner = std::pow(8.0 * std::pow(static_cast<double>(d), 2.0 * s + 2.0), 1.0 / sd) + d - 1.0;
  return sd * inner * std::pow(static_cast<double>(n), 1.0 / sd) + r - s;
}

}  // namespace coint
