#include "cointersect/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "cointersect/anneal.hpp"
#include "cointersect/boolean_f.hpp"
#include "cointersect/bounds.hpp"
#include "cointersect/cnf.hpp"
#include "cointersect/constructions.hpp"
#include "cointersect/error.hpp"
#include "cointersect/exact.hpp"
#include "cointersect/fixtures.hpp"
#include "cointersect/json_io.hpp"
#include "cointersect/oracle.hpp"
#include "cointersect/representation.hpp"

namespace coint {
namespace {

using json_io::Json;

// Raised for argument combinations CLI11 cannot express; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

struct GraphSource {
  std::string file;
  std::string family;
  std::string fixture;
  int n = 0;
  std::vector<int> parts;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (auto f : {Family::star, Family::path, Family::cycle, Family::complete, Family::complete_bipartite,
                 Family::complete_multipartite, Family::knn_minus_matching, Family::karate})
    out.emplace_back(family_name(f));
  return out;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out{"karate"};
  for (auto name : fixtures::names()) out.emplace_back(name);
  return out;
}

void add_graph_options(CLI::App* sub, GraphSource& src) {
  auto* file = sub->add_option("--graph", src.file, "Edge-list file, or a JSON document with a \"graph\" field");
  auto* family = sub->add_option("--family", src.family, "Generated family")->check(CLI::IsMember(family_names()));
  auto* fixture = sub->add_option("--fixture", src.fixture, "Built-in example")->check(CLI::IsMember(fixture_names()));
  file->excludes(family)->excludes(fixture);
  family->excludes(fixture);
  sub->add_option("--n", src.n, "Family size parameter")->check(CLI::PositiveNumber);
  sub->add_option("--parts", src.parts, "Part sizes, comma separated")->delimiter(',');
}

Graph load_graph(const GraphSource& s) {
  if (!s.file.empty()) {
    const std::string text = read_file(s.file);
    if (!looks_like_json(text)) return parse_edge_list(text);
    const Json doc = json_io::parse(text);
    if (doc.contains("result") && doc["result"].contains("graph")) return json_io::graph_from_json(doc["result"]["graph"]);
    if (doc.contains("graph")) return json_io::graph_from_json(doc["graph"]);
    return json_io::graph_from_json(doc);
  }
  if (!s.family.empty()) {
    const Family family = *family_from_name(s.family);
    std::vector<int> params = s.parts;
    if (params.empty() && s.n > 0) params.push_back(s.n);
    return generate(family, params);
  }
  if (!s.fixture.empty()) {
    if (s.fixture == "karate") return families::karate();
    if (auto g = fixtures::graph(s.fixture)) return *g;
  }
  throw UsageError("one of --graph, --family or --fixture is required");
}

// Accepts a bare CIR or any document this tool wrote that carries one.
Json find_assignment(const Json& doc) {
  const Json* j = &doc;
  if (j->contains("result")) j = &(*j)["result"];
  for (const char* key : {"cir", "witness", "best", "assignment"})
    if (j->contains(key)) return (*j)[key];
  return *j;
}

Cir load_cir(const std::string& path) { return json_io::cir_from_json(find_assignment(json_io::parse(read_file(path)))); }

GeneralAssignment load_general(const std::string& path) {
  const Json j = find_assignment(json_io::parse(read_file(path)));
  if (j.contains("sizes")) return json_io::general_from_json(j);
  return from_cir(json_io::cir_from_json(j));
}

// Effective value of every option, defaults included.
Json collect_config(const CLI::App* app) {
  Json cfg = Json::object();
  for (const CLI::Option* o : app->get_options()) {
    if (o == app->get_help_ptr() || o == app->get_help_all_ptr()) continue;
    std::string name = o->get_single_name();
    if (name.empty()) continue;
    if (o->get_type_size() == 0) {
      cfg[name] = o->count() > 0;
    } else if (o->get_items_expected_max() > 1) {
      cfg[name] = o->results();
    } else if (o->count() > 0) {
      const auto& res = o->results();
      if (res.size() == 1) {
        cfg[name] = res.front();
      } else {
        cfg[name] = res;
      }
    } else if (!o->get_default_str().empty()) {
      cfg[name] = o->get_default_str();
    }
  }
  return cfg;
}

class Output {
 public:
  Output(const Globals& globals, std::ostream& out) : globals_(globals), out_(out) {}

  void write(const std::string& text) const {
    if (globals_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(globals_.out, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + globals_.out + "'");
    f << text;
  }

 private:
  const Globals& globals_;
  std::ostream& out_;
};

struct Context {
  const Globals& globals;
  const CLI::App* root;
  const CLI::App* sub;
  Output output;

  Json config() const {
    Json cfg = collect_config(root);
    cfg.update(collect_config(sub));
    return cfg;
  }

  Json document(const Json& result) const {
    return {{"tool", "cointersect"},
            {"version", std::string(kVersion)},
            {"command", sub->get_name()},
            {"config", config()},
            {"result", result}};
  }

  // Header for text and DOT outputs; `lead` is the comment marker.
  std::string header(std::string_view lead) const {
    std::string h = std::string(lead) + " cointersect " + std::string(kVersion) + " " + sub->get_name() + "\n";
    h += std::string(lead) + " config " + config().dump() + "\n";
    return h;
  }

  void json(const Json& result) const { output.write(json_io::dump(document(result))); }
  void text(std::string_view lead, const std::string& body) const { output.write(header(lead) + body); }

  void require_format(std::initializer_list<std::string_view> allowed) const {
    for (auto f : allowed)
      if (globals.format == f) return;
    throw UsageError(sub->get_name() + " does not support --format " + globals.format);
  }
};

std::string set_text(const FeatureSet& s) {
  std::string out = "{";
  bool first = true;
  for (int f : s.members()) {
    if (!first) out += ",";
    out += std::to_string(f);
    first = false;
  }
  return out + "}";
}

std::string cir_text(const Cir& r) {
  std::ostringstream os;
  os << "alpha " << r.alpha << " beta " << r.beta << "\n";
  for (int v = 0; v < r.vertex_count(); ++v) os << v << " " << set_text(r.a[v]) << " | " << set_text(r.b[v]) << "\n";
  return os.str();
}

std::string edge_text(const Graph& g) { return render_edge_list(g); }

// Pair communities drawn as cliques: colour from the A-feature, line style from
// the B-feature.
std::string communities_dot(const Cir& r) {
  static const char* colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
  const Communities c = communities(r);
  std::ostringstream os;
  os << "graph communities {\n";
  for (int v = 0; v < r.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << v << "\\n" << set_text(r.a[v]) << "|" << set_text(r.b[v]) << "\"];\n";
  for (const auto& p : c.pairs) {
    for (std::size_t i = 0; i < p.members.size(); ++i) {
      for (std::size_t j = i + 1; j < p.members.size(); ++j) {
        os << "  " << p.members[i] << " -- " << p.members[j] << " [color=" << colors[p.a % 8]
           << ", style=" << styles[p.b % 4] << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

// ---- subcommands --------------------------------------------------------

void cmd_gen(const Context& ctx, const GraphSource& src) {
  ctx.require_format({"json", "text", "dot"});
  const Graph g = load_graph(src);
  if (ctx.globals.format == "json") return ctx.json({{"graph", json_io::to_json(g)}});
  if (ctx.globals.format == "dot") return ctx.text("//", to_dot(g));
  ctx.text("#", edge_text(g));
}

void cmd_bounds(const Context& ctx, const GraphSource& src, const BoundsOptions& opts) {
  ctx.require_format({"json", "text"});
  const BoundsReport b = thetac_bounds(load_graph(src), opts);
  if (ctx.globals.format == "json") return ctx.json(json_io::to_json(b));
  std::ostringstream os;
  os << "n " << b.n << "\nmax_degree " << b.max_degree << "\ntheta1 " << b.theta1
     << (b.theta1_exact ? " (exact)" : " (greedy upper bound)") << "\nlower " << b.lower_thetac << "\n";
  for (const auto& u : b.upper) {
    os << "upper " << u.name << " ";
    if (u.applicable) {
      os << u.ceiling;
    } else {
      os << "n/a";
    }
    if (!u.note.empty()) os << " (" << u.note << ")";
    os << "\n";
  }
  os << "best_upper " << b.best_upper() << "\n";
  ctx.text("#", os.str());
}

struct ExactArgs {
  std::int64_t timeout_ms = 0;
  std::string emit_cnf;
  std::optional<int> theta1;
  int threads = 0;
};

void cmd_exact(const Context& ctx, const GraphSource& src, const ExactArgs& args) {
  ctx.require_format({"json", "text"});
  const Graph g = load_graph(src);
  ExactOptions opts;
  opts.theta1 = args.theta1;
  opts.threads = args.threads;
  if (args.timeout_ms > 0) opts.timeout = std::chrono::milliseconds(args.timeout_ms);
  if (!args.emit_cnf.empty()) {
    std::filesystem::create_directories(args.emit_cnf);
    opts.on_encode = [dir = args.emit_cnf](const CnfInstance& c) {
      const auto path = std::filesystem::path(dir) /
                        ("alpha" + std::to_string(c.map.alpha) + "_beta" + std::to_string(c.map.beta) + ".cnf");
      std::ofstream f(path, std::ios::binary);
      if (!f) throw DomainError("cannot write '" + path.string() + "'");
      f << export_dimacs(c);
    };
  }
  const ExactResult r = theta_c_exact(g, opts);
  if (ctx.globals.format == "json") return ctx.json(json_io::to_json(r));
  std::ostringstream os;
  os << "theta_c " << r.theta_c << "\nalpha " << r.alpha << "\nbeta " << r.beta << "\n";
  for (const auto& p : r.probes)
    os << "probe total=" << p.total << " alpha=" << p.alpha << " beta=" << p.beta << " " << status_name(p.status)
       << "\n";
  os << "witness\n" << cir_text(r.witness);
  ctx.text("#", os.str());
}

struct AnnealArgs {
  AnnealParams params;
  std::optional<std::int64_t> rounds;
  int restarts = 1;
  int threads = 0;
  std::string trace;
  std::int64_t trace_every = 100;
  bool no_early_stop = false;
};

void cmd_anneal(const Context& ctx, const GraphSource& src, AnnealArgs args) {
  ctx.require_format({"json", "text"});
  const Graph g = load_graph(src);
  AnnealParams p = args.params;
  p.seed = ctx.globals.seed;
  p.rounds = args.rounds;
  p.stop_when_perfect = !args.no_early_stop;
  if (!args.trace.empty()) p.trace_every = args.trace_every;
  const auto runs = anneal_runs(g, p, args.restarts, args.threads);
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].best_score.matched > runs[best].best_score.matched) best = i;
  const AnnealResult& r = runs[best];

  if (!args.trace.empty()) {
    std::ofstream f(args.trace, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + args.trace + "'");
    f << "round,current,best\n";
    for (const auto& t : r.trace) f << t.round << "," << t.current << "," << t.best << "\n";
  }

  if (ctx.globals.format == "json") {
    Json result = json_io::to_json(r);
    result.erase("trace");
    Json summary = Json::array();
    for (const auto& run : runs) summary.push_back({{"seed", run.seed}, {"matched", run.best_score.matched}});
    result["runs"] = std::move(summary);
    return ctx.json(result);
  }
  std::ostringstream os;
  os << "seed " << r.seed << "\nmatched " << r.best_score.matched << " / " << r.best_score.total << "\n"
     << "rounds_run " << r.rounds_run << " of " << r.rounds << "\n"
     << cir_text(r.best);
  ctx.text("#", os.str());
}

struct ConstructArgs {
  std::string kind;
  int alpha = 0;
  int beta = 0;
  int t = 0;
  int s = 0;
  int k = 0;
  int r = 0;
  bool no_correction = false;
};

void cmd_construct(const Context& ctx, const GraphSource& src, const ConstructArgs& a) {
  ctx.require_format({"json", "text", "dot"});
  auto need = [](int value, const char* flag) {
    if (value <= 0) throw UsageError(std::string("construct needs ") + flag);
  };
  Cir cir;
  if (a.kind == "star" || a.kind == "path" || a.kind == "cycle") {
    need(src.n, "--n");
    need(a.alpha, "--alpha");
    need(a.beta, "--beta");
    if (a.kind == "star") cir = construct_star(src.n, a.alpha, a.beta);
    if (a.kind == "path") cir = construct_path(src.n, a.alpha, a.beta);
    if (a.kind == "cycle") cir = construct_cycle(src.n, a.alpha, a.beta, !a.no_correction);
  } else if (a.kind == "bipartite") {
    cir = construct_bipartite(load_graph(src));
  } else if (a.kind == "knn") {
    need(src.n, "--n");
    need(a.t, "--t");
    need(a.s, "--s");
    cir = construct_knn(src.n, a.t, a.s);
  } else {
    need(a.k, "--k");
    need(a.r, "--r");
    const ResolvablePacking p = is_prime(a.k) ? affine_plane(a.k) : packing_three_classes(a.k);
    cir = construct_multipartite(p, a.r);
  }
  const Graph g = graph_from_assignment(cir);
  if (ctx.globals.format == "json") return ctx.json({{"cir", json_io::to_json(cir)}, {"graph", json_io::to_json(g)}});
  if (ctx.globals.format == "dot") return ctx.text("//", communities_dot(cir));
  ctx.text("#", cir_text(cir));
}

struct AssignmentArgs {
  std::string cir;
  std::string formula;
};

// verify and score share their inputs; a formula switches to the general form.
std::pair<Graph, Json> check_assignment(const GraphSource& src, const AssignmentArgs& a, bool want_score,
                                        bool& valid) {
  const Graph g = load_graph(src);
  Json result;
  if (a.formula.empty()) {
    const Cir r = load_cir(a.cir);
    check_well_formed(r);
    if (r.vertex_count() != g.n()) throw DomainError("assignment and graph have different vertex counts");
    const auto bad = verify(g, r);
    valid = bad.empty();
    result = {{"valid", valid}, {"violations", json_io::edges_to_json(bad)}};
    if (want_score) result["score"] = json_io::to_json(score(g, r));
  } else {
    const DnfFormula f = parse_dnf(a.formula);
    const GeneralAssignment asg = load_general(a.cir);
    check_well_formed(asg);
    if (asg.vertex_count() != g.n()) throw DomainError("assignment and graph have different vertex counts");
    const auto bad = verify_f(g, asg, f);
    valid = bad.empty();
    result = {{"valid", valid}, {"violations", json_io::edges_to_json(bad)}, {"formula", render_dnf(f)}};
    if (want_score) result["score"] = json_io::to_json(score_f(g, asg, f));
  }
  return {g, result};
}

int cmd_verify(const Context& ctx, const GraphSource& src, const AssignmentArgs& a) {
  ctx.require_format({"json", "text"});
  bool valid = false;
  const auto [g, result] = check_assignment(src, a, false, valid);
  if (ctx.globals.format == "json") {
    ctx.json(result);
  } else {
    std::ostringstream os;
    os << (valid ? "valid" : "invalid") << "\n";
    for (const auto& e : result["violations"]) os << "violation " << e[0] << " " << e[1] << "\n";
    ctx.text("#", os.str());
  }
  return valid ? 0 : 1;
}

void cmd_score(const Context& ctx, const GraphSource& src, const AssignmentArgs& a) {
  ctx.require_format({"json", "text"});
  bool valid = false;
  const auto [g, result] = check_assignment(src, a, true, valid);
  if (ctx.globals.format == "json") return ctx.json(result);
  const auto& s = result["score"];
  ctx.text("#", "matched " + s["matched"].dump() + " / " + s["total"].dump() + "\n");
}

void cmd_communities(const Context& ctx, const std::string& path) {
  ctx.require_format({"json", "text", "dot"});
  const Cir r = load_cir(path);
  check_well_formed(r);
  if (ctx.globals.format == "dot") return ctx.text("//", communities_dot(r));
  const Communities c = communities(r);
  if (ctx.globals.format == "json") return ctx.json(json_io::to_json(c));
  std::ostringstream os;
  auto list = [&](const std::vector<int>& vs) {
    for (int v : vs) os << " " << v;
    os << "\n";
  };
  for (std::size_t f = 0; f < c.a.size(); ++f) {
    os << "A" << f << ":";
    list(c.a[f]);
  }
  for (std::size_t f = 0; f < c.b.size(); ++f) {
    os << "B" << f << ":";
    list(c.b[f]);
  }
  for (const auto& p : c.pairs) {
    os << "A" << p.a << "B" << p.b << ":";
    list(p.members);
  }
  ctx.text("#", os.str());
}

void cmd_synth(const Context& ctx, int n, int alpha, int beta) {
  ctx.require_format({"json", "text", "dot"});
  const Cir r = random_cir(n, alpha, beta, ctx.globals.seed);
  const Graph g = graph_from_assignment(r);
  if (ctx.globals.format == "json") return ctx.json({{"cir", json_io::to_json(r)}, {"graph", json_io::to_json(g)}});
  if (ctx.globals.format == "dot") return ctx.text("//", to_dot(g));
  std::string body;
  std::istringstream lines(cir_text(r));
  for (std::string line; std::getline(lines, line);) body += "# " + line + "\n";
  ctx.text("#", body + edge_text(g));
}

void cmd_align(const Context& ctx, const std::string& reference, const std::string& candidate) {
  ctx.require_format({"json", "text"});
  const Alignment al = align_jaccard(load_cir(reference), load_cir(candidate));
  if (ctx.globals.format == "json") {
    return ctx.json({{"average_jaccard", al.average_jaccard},
                     {"a_map", al.a_map},
                     {"b_map", al.b_map},
                     {"relabeled", json_io::to_json(al.relabeled)}});
  }
  std::ostringstream os;
  os << "average_jaccard " << al.average_jaccard << "\n" << cir_text(al.relabeled);
  ctx.text("#", os.str());
}

void cmd_dnf_bound(const Context& ctx, const std::string& formula, int theta1, std::optional<int> cap) {
  ctx.require_format({"json", "text"});
  const DnfFormula f = parse_dnf(formula);
  const IpBound b = ip_lower_bound(f, theta1, cap);
  if (ctx.globals.format == "json") {
    return ctx.json({{"formula", render_dnf(f)},
                     {"r", f.r},
                     {"s", f.s()},
                     {"warnings", f.warnings},
                     {"bound", json_io::to_json(b)}});
  }
  std::ostringstream os;
  os << "formula " << render_dnf(f) << "\nvalue " << b.value << "\nalphas";
  for (int x : b.alphas) os << " " << x;
  os << "\n";
  for (const auto& w : f.warnings) os << "warning " << w << "\n";
  ctx.text("#", os.str());
}

void cmd_export_dimacs(const Context& ctx, const GraphSource& src, int alpha, int beta, const std::string& model) {
  ctx.require_format({"json", "text"});
  const Graph g = load_graph(src);
  const CnfInstance c = encode(g, alpha, beta);
  if (!model.empty()) {
    const Cir r = decode(import_model(read_file(model), c), g, c.map);
    if (ctx.globals.format == "json") return ctx.json({{"cir", json_io::to_json(r)}});
    return ctx.text("#", cir_text(r));
  }
  const std::string dimacs = export_dimacs(c);
  if (ctx.globals.format == "json") {
    return ctx.json({{"variables", c.var_count}, {"clauses", c.clauses.size()}, {"dimacs", dimacs}});
  }
  ctx.text("c", dimacs);
}

void cmd_packing(const Context& ctx, int k, const std::string& kind, const std::string& check) {
  ctx.require_format({"json", "text"});
  ResolvablePacking p;
  if (!check.empty()) {
    p = json_io::packing_from_json(json_io::parse(read_file(check)));
  } else {
    if (k <= 0) throw UsageError("packing needs --k or --check");
    p = kind == "three" ? packing_three_classes(k) : affine_plane(k);
  }
  const bool valid = verify_packing(p);
  const bool design = valid && is_design(p);
  if (ctx.globals.format == "json") {
    return ctx.json({{"packing", json_io::to_json(p)}, {"valid", valid}, {"design", design}});
  }
  std::ostringstream os;
  os << "k " << p.k << "\nclasses " << p.classes.size() << "\nvalid " << valid << "\ndesign " << design << "\n";
  for (const auto& cls : p.classes) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      os << (j ? " {" : "{");
      for (std::size_t i = 0; i < cls[j].size(); ++i) os << (i ? "," : "") << cls[j][i];
      os << "}";
    }
    os << "\n";
  }
  ctx.text("#", os.str());
}

void cmd_oracle(const Context& ctx, const GraphSource& src, const OracleLimits& limits, int alpha, int beta) {
  ctx.require_format({"json", "text"});
  const Graph g = load_graph(src);
  if ((alpha > 0) != (beta > 0)) throw UsageError("oracle needs both --alpha and --beta, or neither");
  if (alpha > 0) {
    const CirClasses classes = enumerate_optimal_cirs(g, alpha, beta, limits);
    Json reps = Json::array();
    for (const auto& r : classes.representatives) reps.push_back(json_io::to_json(r));
    if (ctx.globals.format == "json") {
      return ctx.json({{"classes", classes.class_count()},
                       {"representations", classes.total_representations},
                       {"representatives", reps}});
    }
    return ctx.text("#", "classes " + std::to_string(classes.class_count()) + "\nrepresentations " +
                             std::to_string(classes.total_representations) + "\n");
  }
  const OracleResult r = brute_theta_c(g, limits);
  if (ctx.globals.format == "json") return ctx.json(json_io::to_json(r));
  std::ostringstream os;
  os << "theta_c " << r.theta_c << "\nalpha " << r.alpha << "\nbeta " << r.beta << "\n" << cir_text(r.witness);
  ctx.text("#", os.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cointersection representations of graphs", "cointersect"};
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for every random choice");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--out", globals.out, "Write output to this file instead of stdout");

  GraphSource src;
  std::function<int(const Context&)> action;
  auto bind = [&](CLI::App* sub, std::function<int(const Context&)> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* gen = app.add_subcommand("gen", "Generate or load a graph and print it");
  add_graph_options(gen, src);
  bind(gen, [&](const Context& ctx) { return cmd_gen(ctx, src), 0; });

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "theta1 and the lower and upper bounds on theta_c");
  add_graph_options(bounds, src);
  bounds->add_option("--theta1", bounds_opts.theta1, "Known intersection number");
  bounds->add_option("--chordal-clique", bounds_opts.chordal_clique, "Largest clique of a chordal input");
  bounds->add_option("--complement-degree", bounds_opts.complement_degree, "d with minimum degree >= n - d");
  bounds->add_option("--exact-limit", bounds_opts.exact_limit, "Largest n for exact theta1");
  bind(bounds, [&](const Context& ctx) { return cmd_bounds(ctx, src, bounds_opts), 0; });

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "Minimum total number of features, via SAT");
  add_graph_options(exact, src);
  exact->add_option("--timeout-ms", exact_args.timeout_ms, "Wall-clock budget; 0 means none")
      ->check(CLI::NonNegativeNumber);
  exact->add_option("--emit-cnf", exact_args.emit_cnf, "Write every probed instance to this directory");
  exact->add_option("--theta1", exact_args.theta1, "Trusted intersection number")->check(CLI::NonNegativeNumber);
  exact->add_option("--threads", exact_args.threads, "Concurrent split probes; 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  bind(exact, [&](const Context& ctx) { return cmd_exact(ctx, src, exact_args), 0; });

  AnnealArgs anneal_args;
  auto* anneal_cmd = app.add_subcommand("anneal", "Randomized search for a representation with fixed alphabets");
  add_graph_options(anneal_cmd, src);
  anneal_cmd->add_option("--alpha", anneal_args.params.alpha, "A-alphabet size")->required()->check(CLI::Range(1, 64));
  anneal_cmd->add_option("--beta", anneal_args.params.beta, "B-alphabet size")->required()->check(CLI::Range(1, 64));
  anneal_cmd->add_option("--c", anneal_args.params.c, "Mixing exponent")->check(CLI::PositiveNumber);
  auto* b_opt = anneal_cmd->add_option("--b", anneal_args.params.b, "Rounds multiplier: ceil(b n ln n)")
                    ->check(CLI::PositiveNumber);
  auto* rounds_opt = anneal_cmd->add_option("--rounds", anneal_args.rounds, "Explicit number of rounds")
                         ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  rounds_opt->excludes(b_opt);
  anneal_cmd->add_option("--restarts", anneal_args.restarts, "Independent runs with seeds seed, seed+1, ...")
      ->check(CLI::PositiveNumber);
  anneal_cmd->add_option("--threads", anneal_args.threads, "Parallel restarts; 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  anneal_cmd->add_option("--trace", anneal_args.trace, "CSV trace of the best run");
  anneal_cmd->add_option("--trace-every", anneal_args.trace_every, "Rounds between trace points")
      ->check(CLI::PositiveNumber);
  anneal_cmd->add_flag("--no-early-stop", anneal_args.no_early_stop, "Run every round even after a perfect score");
  bind(anneal_cmd, [&](const Context& ctx) { return cmd_anneal(ctx, src, anneal_args), 0; });

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Explicit representation of a structured graph");
  add_graph_options(construct, src);
  construct->add_option("--kind", construct_args.kind, "What to build")
      ->required()
      ->check(CLI::IsMember({"star", "path", "cycle", "bipartite", "knn", "multipartite"}));
  construct->add_option("--alpha", construct_args.alpha, "A-alphabet size");
  construct->add_option("--beta", construct_args.beta, "B-alphabet size");
  construct->add_option("--t", construct_args.t, "knn: A-alphabet size t with n = t s");
  construct->add_option("--s", construct_args.s, "knn: s with n = t s");
  construct->add_option("--k", construct_args.k, "multipartite: packing order");
  construct->add_option("--r", construct_args.r, "multipartite: number of parts");
  construct->add_flag("--no-correction", construct_args.no_correction, "cycle: skip the odd-alpha reordering");
  bind(construct, [&](const Context& ctx) { return cmd_construct(ctx, src, construct_args), 0; });

  AssignmentArgs assignment_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check that an assignment represents a graph");
  add_graph_options(verify_cmd, src);
  verify_cmd->add_option("--cir", assignment_args.cir, "Assignment JSON")->required();
  verify_cmd->add_option("--formula", assignment_args.formula, "DNF over the alphabets; default x1 & x2");
  bind(verify_cmd, [&](const Context& ctx) { return cmd_verify(ctx, src, assignment_args); });

  auto* score_cmd = app.add_subcommand("score", "Count the pairs an assignment gets right");
  add_graph_options(score_cmd, src);
  score_cmd->add_option("--cir", assignment_args.cir, "Assignment JSON")->required();
  score_cmd->add_option("--formula", assignment_args.formula, "DNF over the alphabets; default x1 & x2");
  bind(score_cmd, [&](const Context& ctx) { return cmd_score(ctx, src, assignment_args), 0; });

  std::string communities_cir;
  auto* communities_cmd = app.add_subcommand("communities", "Feature and feature-pair communities");
  communities_cmd->add_option("--cir", communities_cir, "Assignment JSON")->required();
  bind(communities_cmd, [&](const Context& ctx) { return cmd_communities(ctx, communities_cir), 0; });

  int synth_n = 0;
  int synth_alpha = 0;
  int synth_beta = 0;
  auto* synth = app.add_subcommand("synth", "Random assignment and the graph it induces");
  synth->add_option("--n", synth_n, "Vertices")->required()->check(CLI::PositiveNumber);
  synth->add_option("--alpha", synth_alpha, "A-alphabet size")->required()->check(CLI::Range(1, 64));
  synth->add_option("--beta", synth_beta, "B-alphabet size")->required()->check(CLI::Range(1, 64));
  bind(synth, [&](const Context& ctx) { return cmd_synth(ctx, synth_n, synth_alpha, synth_beta), 0; });

  std::string align_reference;
  std::string align_candidate;
  auto* align = app.add_subcommand("align", "Relabel a candidate to best match a reference");
  align->add_option("--reference", align_reference, "Reference assignment JSON")->required();
  align->add_option("--candidate", align_candidate, "Candidate assignment JSON")->required();
  bind(align, [&](const Context& ctx) { return cmd_align(ctx, align_reference, align_candidate), 0; });

  std::string dnf_formula;
  int dnf_theta1 = 0;
  std::optional<int> dnf_cap;
  auto* dnf = app.add_subcommand("dnf-bound", "Integer lower bound on the features of a monotone f");
  dnf->add_option("--formula", dnf_formula, "DNF such as \"x1 | x2 & x3\"")->required();
  dnf->add_option("--theta1", dnf_theta1, "Intersection number")->required()->check(CLI::NonNegativeNumber);
  dnf->add_option("--cap", dnf_cap, "Largest alphabet size tried")->check(CLI::PositiveNumber);
  bind(dnf, [&](const Context& ctx) { return cmd_dnf_bound(ctx, dnf_formula, dnf_theta1, dnf_cap), 0; });

  int dimacs_alpha = 0;
  int dimacs_beta = 0;
  std::string dimacs_model;
  auto* dimacs = app.add_subcommand("export-dimacs", "CNF for a fixed (alpha, beta), or decode a model for it");
  add_graph_options(dimacs, src);
  dimacs->add_option("--alpha", dimacs_alpha, "A-alphabet size")->required()->check(CLI::PositiveNumber);
  dimacs->add_option("--beta", dimacs_beta, "B-alphabet size")->required()->check(CLI::PositiveNumber);
  dimacs->add_option("--model", dimacs_model, "Solver output to validate and decode");
  bind(dimacs, [&](const Context& ctx) {
    return cmd_export_dimacs(ctx, src, dimacs_alpha, dimacs_beta, dimacs_model), 0;
  });

  int packing_k = 0;
  std::string packing_kind = "affine";
  std::string packing_check;
  auto* packing = app.add_subcommand("packing", "Resolvable packings and affine planes");
  auto* k_opt = packing->add_option("--k", packing_k, "Order")->check(CLI::PositiveNumber);
  packing->add_option("--kind", packing_kind, "affine (k+1 classes) or three (rows, columns, diagonals)")
      ->check(CLI::IsMember({"affine", "three"}));
  packing->add_option("--check", packing_check, "Verify a packing JSON file instead")->excludes(k_opt);
  bind(packing, [&](const Context& ctx) { return cmd_packing(ctx, packing_k, packing_kind, packing_check), 0; });

  OracleLimits oracle_limits;
  int oracle_alpha = 0;
  int oracle_beta = 0;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for tiny graphs");
  oracle->group("");
  add_graph_options(oracle, src);
  oracle->add_option("--max-n", oracle_limits.max_n, "Largest graph accepted");
  oracle->add_option("--max-total", oracle_limits.max_total_features, "Largest alpha + beta tried");
  oracle->add_option("--alpha", oracle_alpha, "Enumerate classes at this split (with --beta)");
  oracle->add_option("--beta", oracle_beta, "Enumerate classes at this split (with --alpha)");
  bind(oracle, [&](const Context& ctx) {
    return cmd_oracle(ctx, src, oracle_limits, oracle_alpha, oracle_beta), 0;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const Context ctx{globals, &app, sub, Output(globals, out)};
  try {
    return action(ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coint
