#include "cointersect/cnf.hpp"

#include <charconv>
#include <sstream>

#include "cointersect/error.hpp"

namespace coint {

CnfInstance encode(const Graph& g, int alpha, int beta) {
  if (alpha < 1 || beta < 1) throw DomainError("encode: alphabets must be nonempty");
  CnfInstance c;
  VarMap& m = c.map;
  m.n = g.n();
  m.alpha = alpha;
  m.beta = beta;
  m.edges = g.edges();
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) m.non_edges.push_back({u, v});
  c.var_count = m.var_count();

  auto& cl = c.clauses;
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e) {
    const auto [u, v] = m.edges[e];
    std::vector<int> any_a;
    std::vector<int> any_b;
    // A(e,a) <-> x(u,a) & x(v,a)
    for (int a = 0; a < alpha; ++a) {
      const int t = m.a_var(e, a);
      cl.push_back({-t, m.x(u, a)});
      cl.push_back({-t, m.x(v, a)});
      cl.push_back({t, -m.x(u, a), -m.x(v, a)});
      any_a.push_back(t);
    }
    for (int b = 0; b < beta; ++b) {
      const int t = m.b_var(e, b);
      cl.push_back({-t, m.y(u, b)});
      cl.push_back({-t, m.y(v, b)});
      cl.push_back({t, -m.y(u, b), -m.y(v, b)});
      any_b.push_back(t);
    }
    cl.push_back(std::move(any_a));
    cl.push_back(std::move(any_b));
  }
  // Non-edge: a shared A-feature forces C, a shared B-feature forces D, and
  // C and D exclude each other.
  for (int k = 0; k < static_cast<int>(m.non_edges.size()); ++k) {
    const auto [u, v] = m.non_edges[k];
    cl.push_back({-m.c_var(k), -m.d_var(k)});
    for (int a = 0; a < alpha; ++a) cl.push_back({m.c_var(k), -m.x(u, a), -m.x(v, a)});
    for (int b = 0; b < beta; ++b) cl.push_back({m.d_var(k), -m.y(u, b), -m.y(v, b)});
  }
  return c;
}

std::string export_dimacs(const CnfInstance& c) {
  const VarMap& m = c.map;
  std::ostringstream os;
  os << "c cointersection encoding n=" << m.n << " alpha=" << m.alpha << " beta=" << m.beta
     << " edges=" << m.edges.size() << " non_edges=" << m.non_edges.size() << "\n";
  auto range = [&](const char* name, int first, int count, const char* order) {
    os << "c " << name << " vars " << first << ".." << (first + count - 1) << " (" << order << ")\n";
  };
  range("x", m.x(0, 0), m.n * m.alpha, "vertex-major, A-label minor");
  range("y", m.y(0, 0), m.n * m.beta, "vertex-major, B-label minor");
  range("A", m.a_var(0, 0), static_cast<int>(m.edges.size()) * m.alpha, "edge-major, A-label minor");
  range("B", m.b_var(0, 0), static_cast<int>(m.edges.size()) * m.beta, "edge-major, B-label minor");
  range("C", m.c_var(0), static_cast<int>(m.non_edges.size()), "per non-edge");
  range("D", m.d_var(0), static_cast<int>(m.non_edges.size()), "per non-edge");
  os << "p cnf " << c.var_count << " " << c.clauses.size() << "\n";
  for (const auto& clause : c.clauses) {
    for (int lit : clause) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

bool satisfies(const CnfInstance& c, const Model& model) {
  if (model.size() != static_cast<std::size_t>(c.var_count) + 1) return false;
  for (const auto& clause : c.clauses) {
    bool ok = false;
    for (int lit : clause) {
      const bool value = model[lit > 0 ? lit : -lit];
      if (value == (lit > 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

Model import_model(std::string_view text, const CnfInstance& c) {
  Model model(static_cast<std::size_t>(c.var_count) + 1, false);
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 's') {
      if (line.find("UNSAT") != std::string_view::npos) throw DomainError("model file reports UNSATISFIABLE");
      continue;
    }
    if (line[0] == 'v') line.remove_prefix(1);
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      int lit = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, lit);
      if (ec != std::errc() || p != line.data() + j) {
        throw DomainError("model line " + std::to_string(line_no) + ": bad literal '" +
                          std::string(line.substr(i, j - i)) + "'");
      }
      const int var = lit > 0 ? lit : -lit;
      if (var > c.var_count) {
        throw DomainError("model line " + std::to_string(line_no) + ": variable " + std::to_string(var) +
                          " out of range");
      }
      if (var != 0) model[var] = lit > 0;
      i = j;
    }
  }
  if (!satisfies(c, model)) throw DomainError("model does not satisfy the instance");
  return model;
}

Cir decode(const Model& model, const Graph& g, const VarMap& map) {
  if (map.n != g.n()) throw DomainError("decode: variable map built for a different graph");
  if (model.size() < static_cast<std::size_t>(map.var_count()) + 1) throw DomainError("decode: model too short");
  Cir r = Cir::empty(g.n(), map.alpha, map.beta);
  for (int v = 0; v < g.n(); ++v) {
    for (int a = 0; a < map.alpha; ++a)
      if (model[map.x(v, a)]) r.a[v].insert(a);
    for (int b = 0; b < map.beta; ++b)
      if (model[map.y(v, b)]) r.b[v].insert(b);
  }
  if (!verify(g, r).empty()) throw InternalError("decoded assignment does not represent the graph");
  return r;
}

}  // namespace coint
