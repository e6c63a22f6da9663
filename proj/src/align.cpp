#include <algorithm>
#include <limits>
#include <numeric>

#include "cointersect/error.hpp"
#include "cointersect/representation.hpp"

namespace coint {
namespace {

// Alphabets up to this size are aligned by trying every permutation; the
// per-vertex Jaccard objective does not decompose over label pairs.
constexpr int kExhaustiveLimit = 8;

double side_objective(const std::vector<FeatureSet>& ref, const std::vector<FeatureSet>& cand,
                      std::span<const int> mapping, int alphabet) {
  double sum = 0.0;
  for (std::size_t v = 0; v < ref.size(); ++v) sum += jaccard(ref[v], cand[v].remapped(mapping, alphabet));
  return sum;
}

// Hungarian method (shortest augmenting paths), square cost matrix, minimizes.
// Returns assignment row -> column.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) assignment[p[j] - 1] = j - 1;
  return assignment;
}

std::vector<int> align_side(const std::vector<FeatureSet>& ref, const std::vector<FeatureSet>& cand, int alphabet) {
  std::vector<int> mapping(alphabet);
  std::iota(mapping.begin(), mapping.end(), 0);
  constexpr double eps = 1e-12;

  if (alphabet <= kExhaustiveLimit) {
    std::vector<int> best = mapping;
    double best_value = side_objective(ref, cand, mapping, alphabet);
    while (std::next_permutation(mapping.begin(), mapping.end())) {
      const double value = side_objective(ref, cand, mapping, alphabet);
      if (value > best_value + eps) {
        best_value = value;
        best = mapping;
      }
    }
    return best;
  }

  // Large alphabets: linearized gain + optimal matching, then pairwise swaps on
  // the true objective until no swap improves it.
  std::vector<std::vector<double>> cost(alphabet, std::vector<double>(alphabet, 0.0));
  for (std::size_t v = 0; v < ref.size(); ++v) {
    const auto rm = ref[v].members();
    const auto cm = cand[v].members();
    const double weight = 1.0 / static_cast<double>(std::max<std::size_t>(1, rm.size() + cm.size()));
    for (int c : cm)
      for (int r : rm) cost[c][r] -= weight;
  }
  mapping = hungarian(cost);
  double value = side_objective(ref, cand, mapping, alphabet);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < alphabet; ++i) {
      for (int j = i + 1; j < alphabet; ++j) {
        std::swap(mapping[i], mapping[j]);
        const double next = side_objective(ref, cand, mapping, alphabet);
        if (next > value + eps) {
          value = next;
          improved = true;
        } else {
          std::swap(mapping[i], mapping[j]);
        }
      }
    }
  }
  return mapping;
}

}  // namespace

Alignment align_jaccard(const Cir& reference, const Cir& candidate) {
  check_well_formed(reference);
  check_well_formed(candidate);
  if (reference.vertex_count() != candidate.vertex_count()) {
    throw DomainError("representations cover different vertex counts");
  }
  if (reference.alpha != candidate.alpha || reference.beta != candidate.beta) {
    throw DomainError("alignment needs equal alphabet sizes");
  }
  Alignment out;
  out.a_map = align_side(reference.a, candidate.a, reference.alpha);
  out.b_map = align_side(reference.b, candidate.b, reference.beta);
  out.relabeled = relabeled(candidate, out.a_map, out.b_map);
  out.average_jaccard = average_jaccard(reference, out.relabeled);
  return out;
}

}  // namespace coint
