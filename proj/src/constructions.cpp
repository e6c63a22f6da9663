#include "cointersect/constructions.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "cointersect/error.hpp"

namespace coint {
namespace {

// A cell (a, b) of the alpha x beta grid labels one edge. Consecutive edges get
// cells in a common row or column, and all cells are distinct; then each vertex
// holds exactly the two feature pairs of its edges and no other pair of
// vertices can share a pair.
using Cell = std::pair<int, int>;

void require_pairs(long long available, long long needed, const char* what) {
  if (available < needed) {
    throw DomainError(std::string(what) + ": alpha*beta = " + std::to_string(available) + " is below the " +
                      std::to_string(needed) + " edges to label");
  }
}

void require_alphabets(int alpha, int beta) {
  if (alpha < 1 || beta < 1) throw DomainError("feature alphabets must be nonempty");
}

Cir from_path_cells(int n, int alpha, int beta, const std::vector<Cell>& cells) {
  Cir r = Cir::empty(n, alpha, beta);
  for (int e = 0; e + 1 < n; ++e) {
    for (int v : {e, e + 1}) {
      r.a[v].insert(cells[e].first);
      r.b[v].insert(cells[e].second);
    }
  }
  return r;
}

Cir from_cycle_cells(int n, int alpha, int beta, const std::vector<Cell>& cells) {
  Cir r = Cir::empty(n, alpha, beta);
  for (int e = 0; e < n; ++e) {
    for (int v : {e, (e + 1) % n}) {
      r.a[v].insert(cells[e].first);
      r.b[v].insert(cells[e].second);
    }
  }
  return r;
}

Cell zigzag_cell(int edge, int beta) {
  const int group = edge / beta;
  const int pos = edge % beta;
  return {group, group % 2 == 0 ? pos : beta - 1 - pos};
}

// Closed tour through n cells, alpha, beta >= 2, 4 <= n <= alpha*beta: row 0
// left to right, rows 1..R snaking over columns 1..beta-1, then back up column
// 0. Cells strictly inside a straight run may be skipped, which is how the
// length is trimmed to n.
std::vector<Cell> closed_rook_tour(int n, int alpha, int beta) {
  if (n == 4) return {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  const int rows = std::max(1, (n + beta - 1) / beta - 1);
  if (rows > alpha - 1) throw InternalError("rook tour needs more rows than the alphabet has");
  int first = beta;
  std::vector<int> snake(rows, beta - 1);
  int back = rows;
  int excess = beta + rows * beta - n;
  const int snake_min = beta >= 3 ? 2 : 1;

  auto take = [&](int& count, int floor) {
    const int d = std::min(excess, count - floor);
    count -= d;
    excess -= d;
  };
  take(back, 1);
  for (int r = rows - 1; r >= 0 && excess > 0; --r) take(snake[r], snake_min);
  take(first, 2);
  if (excess != 0) throw InternalError("rook tour cannot be trimmed to the requested length");

  // A run from `from` to `to` keeping both ends and the first count-2 interior cells.
  auto run = [](int from, int to, int count) {
    std::vector<int> out{from};
    const int step = to > from ? 1 : -1;
    for (int c = from + step, kept = 0; c != to && kept < count - 2; c += step, ++kept) out.push_back(c);
    if (to != from) out.push_back(to);
    return out;
  };

  std::vector<Cell> cells;
  for (int c : run(0, beta - 1, first)) cells.push_back({0, c});
  for (int r = 1; r <= rows; ++r) {
    const bool down = r % 2 == 1;
    for (int c : run(down ? beta - 1 : 1, down ? 1 : beta - 1, snake[r - 1])) cells.push_back({r, c});
  }
  cells.push_back({rows, 0});
  for (int r = rows - 1, kept = 0; r >= 1 && kept < back - 1; --r, ++kept) cells.push_back({r, 0});
  return cells;
}

}  // namespace

Cir construct_star(int n, int alpha, int beta) {
  require_alphabets(alpha, beta);
  if (n < 1) throw DomainError("star needs at least one vertex");
  require_pairs(static_cast<long long>(alpha) * beta, n - 1, "construct_star");
  Cir r = Cir::empty(n, alpha, beta);
  for (int f = 0; f < alpha; ++f) r.a[0].insert(f);
  for (int f = 0; f < beta; ++f) r.b[0].insert(f);
  for (int i = 0; i + 1 < n; ++i) {
    r.a[i + 1].insert(i / beta);
    r.b[i + 1].insert(i % beta);
  }
  return r;
}

Cir construct_path(int n, int alpha, int beta) {
  require_alphabets(alpha, beta);
  if (n < 1) throw DomainError("path needs at least one vertex");
  require_pairs(static_cast<long long>(alpha) * beta, n - 1, "construct_path");
  std::vector<Cell> cells;
  for (int e = 0; e + 1 < n; ++e) cells.push_back(zigzag_cell(e, beta));
  return from_path_cells(n, alpha, beta, cells);
}

Cir construct_cycle(int n, int alpha, int beta, bool correction) {
  require_alphabets(alpha, beta);
  if (n < 3) throw DomainError("cycle needs at least three vertices");
  if (n == 3) {
    // C3 is a triangle: one shared pair suffices.
    Cir r = Cir::empty(n, alpha, beta);
    for (int v = 0; v < n; ++v) {
      r.a[v].insert(0);
      r.b[v].insert(0);
    }
    return r;
  }
  require_pairs(static_cast<long long>(alpha) * beta, n, "construct_cycle");

  std::vector<Cell> cells;
  if (alpha == 1 || beta == 1) {
    for (int e = 0; e < n; ++e) cells.push_back(alpha == 1 ? Cell{0, e} : Cell{e, 0});
    return from_cycle_cells(n, alpha, beta, cells);
  }
  if (static_cast<long long>(alpha) * beta > n) return from_cycle_cells(n, alpha, beta, closed_rook_tour(n, alpha, beta));

  if (alpha % 2 == 1 && beta == 2 && correction) return swapped(construct_cycle(n, beta, alpha, correction));
  for (int e = 0; e < n; ++e) cells.push_back(zigzag_cell(e, beta));
  if (alpha % 2 == 1 && correction) {
    // Second-to-last group: beta-1, ..., 2, 0, 1. Last group: 1, 2, ..., beta-1, 0.
    const int g1 = (alpha - 2) * beta;
    const int g2 = (alpha - 1) * beta;
    for (int p = 0; p < beta - 2; ++p) cells[g1 + p].second = beta - 1 - p;
    cells[g1 + beta - 2].second = 0;
    cells[g1 + beta - 1].second = 1;
    for (int p = 0; p < beta - 1; ++p) cells[g2 + p].second = p + 1;
    cells[g2 + beta - 1].second = 0;
  }
  return from_cycle_cells(n, alpha, beta, cells);
}

Cir construct_bipartite(const Graph& g) {
  auto side = bipartition(g);
  if (!side) throw DomainError("construct_bipartite: graph is not bipartite");
  std::vector<int> index(g.n());
  int count[2] = {0, 0};
  for (int v = 0; v < g.n(); ++v) index[v] = count[(*side)[v]]++;
  Cir r = Cir::empty(g.n(), std::max(1, count[0]), std::max(1, count[1]));
  for (int v = 0; v < g.n(); ++v) {
    if ((*side)[v] == 0) {
      r.a[v].insert(index[v]);
      for (int w : g.neighbors(v)) r.b[v].insert(index[w]);
    } else {
      r.b[v].insert(index[v]);
      for (int w : g.neighbors(v)) r.a[v].insert(index[w]);
    }
  }
  return r;
}

Cir construct_knn(int n, int t, int s) {
  if (n < 1 || t < 1 || s < 1) throw DomainError("construct_knn needs positive n, t, s");
  if (static_cast<long long>(t) * s != n) {
    throw DomainError("construct_knn: n = " + std::to_string(n) + " is not t*s = " + std::to_string(t * s));
  }
  const int width = t * s;
  Cir r = Cir::empty(2 * n, t, t * s * s);
  for (int i = 0; i < n; ++i) {
    r.a[i].insert(i / s);
    for (int c = 0; c < width; ++c) r.b[i].insert((i % s) * width + c);
  }
  for (int j = 0; j < n; ++j) {
    for (int f = 0; f < t; ++f) r.a[n + j].insert(f);
    for (int row = 0; row < s; ++row) r.b[n + j].insert(row * width + j);
  }
  return r;
}

bool is_prime(int k) {
  if (k < 2) return false;
  for (int d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

ResolvablePacking packing_three_classes(int k) {
  if (k < 2) throw DomainError("packing_three_classes needs k >= 2");
  ResolvablePacking p;
  p.k = k;
  p.classes.assign(3, std::vector<std::vector<int>>(k));
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      p.classes[0][x].push_back(x * k + y);
      p.classes[1][x].push_back(y * k + x);
      p.classes[2][x].push_back(y * k + (y + x) % k);
    }
  }
  return p;
}

ResolvablePacking affine_plane(int k) {
  if (!is_prime(k)) {
    throw DomainError("affine_plane: order " + std::to_string(k) +
                      " is not prime; prime-power construction unsupported");
  }
  ResolvablePacking p;
  p.k = k;
  p.classes.assign(k + 1, std::vector<std::vector<int>>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) p.classes[0][x].push_back(x * k + y);
  for (int m = 0; m < k; ++m)
    for (int c = 0; c < k; ++c)
      for (int x = 0; x < k; ++x) p.classes[m + 1][c].push_back(x * k + (m * x + c) % k);
  return p;
}

Cir construct_multipartite(const ResolvablePacking& packing, int r) {
  if (r < 2) throw DomainError("construct_multipartite needs r >= 2");
  if (static_cast<int>(packing.classes.size()) < r) {
    throw DomainError("construct_multipartite: packing has " + std::to_string(packing.classes.size()) +
                      " parallel classes, need " + std::to_string(r));
  }
  if (!verify_packing(packing)) throw DomainError("construct_multipartite: not a resolvable packing");
  const int k = packing.k;
  const int n = k * k;
  Cir out = Cir::empty(r * n, n, n);
  for (int l = 0; l < r; ++l) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const int v = l * n + i * k + j;
        for (int x : packing.classes[l][i]) out.a[v].insert(x);
        for (int x : packing.classes[l][j]) out.b[v].insert(x);
      }
    }
  }
  return out;
}

namespace {

// Number of blocks containing each point pair, or nullopt when the classes are
// not partitions of the point set into k blocks of size k.
std::optional<std::vector<int>> pair_counts(const ResolvablePacking& p) {
  const int k = p.k;
  const int n = k * k;
  if (k < 1) return std::nullopt;
  std::vector<int> counts(static_cast<std::size_t>(n) * n, 0);
  for (const auto& cls : p.classes) {
    if (static_cast<int>(cls.size()) != k) return std::nullopt;
    std::vector<int> seen(n, 0);
    for (const auto& block : cls) {
      if (static_cast<int>(block.size()) != k) return std::nullopt;
      for (int x : block) {
        if (x < 0 || x >= n || seen[x]++) return std::nullopt;
      }
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          const int a = std::min(block[i], block[j]);
          const int b = std::max(block[i], block[j]);
          ++counts[static_cast<std::size_t>(a) * n + b];
        }
    }
  }
  return counts;
}

}  // namespace

bool verify_packing(const ResolvablePacking& p) {
  auto counts = pair_counts(p);
  if (!counts) return false;
  if (std::any_of(counts->begin(), counts->end(), [](int c) { return c > 1; })) return false;
  const int n = p.point_count();
  for (std::size_t l = 0; l < p.classes.size(); ++l) {
    for (std::size_t m = l + 1; m < p.classes.size(); ++m) {
      for (const auto& s : p.classes[l]) {
        std::vector<char> in(n, 0);
        for (int x : s) in[x] = 1;
        for (const auto& t : p.classes[m]) {
          int common = 0;
          for (int x : t) common += in[x];
          if (common != 1) return false;
        }
      }
    }
  }
  return true;
}

bool is_design(const ResolvablePacking& p) {
  if (!verify_packing(p)) return false;
  auto counts = pair_counts(p);
  const int n = p.point_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((*counts)[static_cast<std::size_t>(a) * n + b] != 1) return false;
  return true;
}

}  // namespace coint
