#include "cointersect/json_io.hpp"

#include "cointersect/error.hpp"

namespace coint::json_io {
namespace {

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw DomainError(std::string("JSON: expected integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw DomainError(std::string("JSON: expected array field '") + key + "'");
  }
  return j.at(key);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw DomainError("JSON: expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("JSON: expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

FeatureSet set_from(const Json& j, int universe) {
  FeatureSet s(universe);
  for (int f : int_list(j)) {
    if (f < 0 || f >= universe) {
      throw DomainError("JSON: feature " + std::to_string(f) + " outside alphabet of size " + std::to_string(universe));
    }
    s.insert(f);
  }
  return s;
}

}  // namespace

Json to_json(const Cir& r) {
  Json vertices = Json::array();
  for (int v = 0; v < r.vertex_count(); ++v) vertices.push_back({{"A", r.a[v].members()}, {"B", r.b[v].members()}});
  return {{"alpha", r.alpha}, {"beta", r.beta}, {"vertices", vertices}};
}

Cir cir_from_json(const Json& j) {
  Cir r;
  r.alpha = get_int(j, "alpha");
  r.beta = get_int(j, "beta");
  if (r.alpha < 1 || r.beta < 1) throw DomainError("JSON: alphabets must be nonempty");
  for (const auto& v : get_array(j, "vertices")) {
    if (!v.is_object() || !v.contains("A") || !v.contains("B")) throw DomainError("JSON: vertex needs 'A' and 'B'");
    r.a.push_back(set_from(v.at("A"), r.alpha));
    r.b.push_back(set_from(v.at("B"), r.beta));
  }
  return r;
}

Json to_json(const GeneralAssignment& asg) {
  Json vertices = Json::array();
  for (const auto& sets : asg.sets) {
    Json row = Json::array();
    for (const auto& s : sets) row.push_back(s.members());
    vertices.push_back(std::move(row));
  }
  return {{"sizes", asg.sizes}, {"vertices", vertices}};
}

GeneralAssignment general_from_json(const Json& j) {
  GeneralAssignment asg;
  asg.sizes = int_list(get_array(j, "sizes"));
  for (int s : asg.sizes)
    if (s < 1) throw DomainError("JSON: alphabets must be nonempty");
  for (const auto& v : get_array(j, "vertices")) {
    if (!v.is_array() || v.size() != asg.sizes.size()) {
      throw DomainError("JSON: every vertex needs one subset per alphabet");
    }
    std::vector<FeatureSet> sets;
    for (std::size_t i = 0; i < v.size(); ++i) sets.push_back(set_from(v[i], asg.sizes[i]));
    asg.sets.push_back(std::move(sets));
  }
  return asg;
}

Json to_json(const ResolvablePacking& p) { return {{"k", p.k}, {"classes", p.classes}}; }

ResolvablePacking packing_from_json(const Json& j) {
  ResolvablePacking p;
  p.k = get_int(j, "k");
  for (const auto& cls : get_array(j, "classes")) {
    if (!cls.is_array()) throw DomainError("JSON: a class is an array of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : cls) blocks.push_back(int_list(block));
    p.classes.push_back(std::move(blocks));
  }
  return p;
}

Json to_json(const Graph& g) { return {{"n", g.n()}, {"edges", edges_to_json(g.edges())}}; }

Graph graph_from_json(const Json& j) {
  const int n = get_int(j, "n");
  if (n < 0) throw DomainError("JSON: n must be nonnegative");
  std::vector<Edge> edges;
  for (const auto& e : get_array(j, "edges")) {
    const auto uv = int_list(e);
    if (uv.size() != 2) throw DomainError("JSON: an edge is a pair [u, v]");
    edges.push_back({uv[0], uv[1]});
  }
  return Graph(n, edges);
}

Json to_json(const Score& s) {
  return {{"matched", s.matched}, {"total", s.total}, {"perfect", s.perfect()}};
}

Json to_json(const Communities& c) {
  Json pairs = Json::array();
  for (const auto& p : c.pairs) pairs.push_back({{"a", p.a}, {"b", p.b}, {"members", p.members}});
  return {{"A", c.a}, {"B", c.b}, {"pairs", pairs}};
}

Json to_json(const BoundsReport& b) {
  Json upper = Json::array();
  for (const auto& u : b.upper) {
    Json e = {{"name", u.name}, {"applicable", u.applicable}, {"note", u.note}};
    if (u.applicable) {
      e["value"] = u.value;
      e["ceiling"] = u.ceiling;
    }
    upper.push_back(std::move(e));
  }
  Json j = {{"n", b.n},
            {"max_degree", b.max_degree},
            {"theta1", b.theta1},
            {"theta1_exact", b.theta1_exact},
            {"lower", b.lower_thetac},
            {"upper", upper}};
  j["best_upper"] = b.best_upper();
  return j;
}

Json to_json(const ExactResult& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"total", p.total},
                      {"alpha", p.alpha},
                      {"beta", p.beta},
                      {"status", std::string(status_name(p.status))},
                      {"conflicts", p.conflicts}});
  }
  return {{"theta_c", r.theta_c},
          {"alpha", r.alpha},
          {"beta", r.beta},
          {"witness", to_json(r.witness)},
          {"theta1", r.theta1},
          {"theta1_exact", r.theta1_exact},
          {"lower", r.lower},
          {"upper", r.upper},
          {"probes", probes},
          {"pruned_totals", r.pruned_totals}};
}

Json to_json(const AnnealResult& r) {
  Json j = {{"best", to_json(r.best)},
            {"score", to_json(r.best_score)},
            {"seed", r.seed},
            {"rounds", r.rounds},
            {"rounds_run", r.rounds_run},
            {"accepted", r.accepted}};
  if (!r.trace.empty()) {
    Json trace = Json::array();
    for (const auto& t : r.trace) trace.push_back({t.round, t.current, t.best});
    j["trace"] = std::move(trace);
  }
  return j;
}

Json to_json(const OracleResult& r) {
  return {{"theta_c", r.theta_c}, {"alpha", r.alpha}, {"beta", r.beta}, {"witness", to_json(r.witness)}};
}

Json to_json(const IpBound& b) { return {{"value", b.value}, {"alphas", b.alphas}}; }

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coint::json_io
