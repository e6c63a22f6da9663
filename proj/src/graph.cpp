#include "cointersect/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <queue>
#include <sstream>

#include "cointersect/error.hpp"

namespace coint {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(words_ * static_cast<std::size_t>(n), 0);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside vertex range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    rows_[words_ * e.u + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    rows_[words_ * e.v + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (rows_[words_ * u + v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  return std::span<const std::uint64_t>(rows_).subspan(words_ * static_cast<std::size_t>(v), words_);
}

namespace {

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<long long> declared_n;
  long long max_index = -1;
  bool seen_data = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens[0] == "n") {
      if (seen_data) throw DomainError(where + "vertex-count header must precede edges");
      long long n = 0;
      if (tokens.size() != 2 || !parse_int(tokens[1], n) || n < 0) {
        throw DomainError(where + "expected 'n <count>'");
      }
      declared_n = n;
      seen_data = true;
      continue;
    }
    seen_data = true;
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v) || u < 0 || v < 0) {
      throw DomainError(where + "expected two nonnegative integers");
    }
    if (u == v) throw DomainError(where + "self-loop at vertex " + std::to_string(u));
    if (u > 1'000'000'000 || v > 1'000'000'000) throw DomainError(where + "vertex index too large");
    max_index = std::max({max_index, u, v});
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    if (end == text.size()) break;
  }
  long long n = max_index + 1;
  if (declared_n) {
    if (*declared_n < n) throw DomainError("edge endpoint exceeds declared vertex count");
    n = *declared_n;
  }
  return Graph(static_cast<int>(n), edges);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

namespace families {
namespace {

void require_positive(int value, const char* what) {
  if (value <= 0) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

Graph star(int n) {
  require_positive(n, "star size");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph path(int n) {
  require_positive(n, "path size");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph complete(int n) {
  require_positive(n, "clique size");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph complete_bipartite(int n1, int n2) {
  const int parts[] = {n1, n2};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw DomainError("multipartite graph needs at least one part");
  std::vector<int> offset;
  int n = 0;
  for (int p : parts) {
    require_positive(p, "part size");
    offset.push_back(n);
    n += p;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int u = 0; u < parts[i]; ++u)
        for (int v = 0; v < parts[j]; ++v) edges.push_back({offset[i] + u, offset[j] + v});
  return Graph(n, edges);
}

Graph knn_minus_matching(int n) {
  require_positive(n, "part size");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) edges.push_back({i, n + j});
  return Graph(2 * n, edges);
}

Graph karate() {
  static constexpr int kEdges[][2] = {
      {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},   {0, 10},  {0, 11},
      {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},
      {1, 17},  {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},
      {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
      {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32}, {15, 33},
      {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
      {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
      {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33}};
  std::vector<Edge> edges;
  for (const auto& e : kEdges) edges.push_back({e[0], e[1]});
  return Graph(34, edges);
}

}  // namespace families

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::star, "star"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::knn_minus_matching, "knn_minus_matching"},
    {Family::karate, "karate"},
};

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& entry : kFamilies)
    if (entry.name == name) return entry.family;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& entry : kFamilies)
    if (entry.family == f) return entry.name;
  return "unknown";
}

Graph generate(Family family, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw DomainError(std::string(family_name(family)) + " expects " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (family) {
    case Family::star: need(1); return families::star(params[0]);
    case Family::path: need(1); return families::path(params[0]);
    case Family::cycle: need(1); return families::cycle(params[0]);
    case Family::complete: need(1); return families::complete(params[0]);
    case Family::complete_bipartite: need(2); return families::complete_bipartite(params[0], params[1]);
    case Family::complete_multipartite: return families::complete_multipartite(params);
    case Family::knn_minus_matching: need(1); return families::knn_minus_matching(params[0]);
    case Family::karate: need(0); return families::karate();
  }
  throw DomainError("unknown graph family");
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto ru = g.row(e.u);
    auto rv = g.row(e.v);
    for (std::size_t w = 0; w < ru.size(); ++w)
      if (ru[w] & rv[w]) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph(g.n(), edges);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace coint
