#include "cointersect/boolean_f.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "cointersect/error.hpp"
#include "cointersect/rng.hpp"

namespace coint {

int DnfFormula::s() const {
  std::size_t s = 0;
  for (const auto& c : clauses) s = std::max(s, c.size());
  return static_cast<int>(s);
}

bool DnfFormula::eval(const std::vector<bool>& x) const {
  for (const auto& clause : clauses) {
    bool all = true;
    for (const auto& lit : clause) {
      if (x[lit.var] == lit.negated) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace {

class DnfParser {
 public:
  explicit DnfParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<Literal>> parse() {
    std::vector<std::vector<Literal>> clauses;
    skip();
    if (pos_ >= text_.size()) fail("empty formula");
    clauses.push_back(clause());
    while (peek() == '|') {
      ++pos_;
      clauses.push_back(clause());
    }
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return clauses;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("formula position " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::vector<Literal> clause() {
    const bool wrapped = peek() == '(';
    if (wrapped) ++pos_;
    std::vector<Literal> lits{literal()};
    while (peek() == '&') {
      ++pos_;
      lits.push_back(literal());
    }
    if (wrapped) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return lits;
  }

  Literal literal() {
    Literal lit;
    if (peek() == '!') {
      lit.negated = true;
      ++pos_;
    }
    if (peek() != 'x') fail("expected a variable such as x1");
    ++pos_;
    const std::size_t start = pos_;
    long long index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > 1'000'000) fail("variable index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a variable index after 'x'");
    if (index == 0) {
      pos_ = start;
      fail("variable indices start at 1");
    }
    lit.var = static_cast<int>(index - 1);
    return lit;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_clause(const std::vector<Literal>& clause) {
  std::string out;
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (i) out += " & ";
    if (clause[i].negated) out += '!';
    out += 'x' + std::to_string(clause[i].var + 1);
  }
  return out;
}

}  // namespace

DnfFormula parse_dnf(std::string_view text, const DnfOptions& options) {
  DnfFormula f;
  auto raw = DnfParser(text).parse();
  int max_var = -1;
  for (auto& clause : raw) {
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    bool contradictory = false;
    for (std::size_t i = 1; i < clause.size(); ++i)
      if (clause[i].var == clause[i - 1].var) contradictory = true;
    for (const auto& lit : clause) {
      max_var = std::max(max_var, lit.var);
      if (lit.negated) f.monotone = false;
    }
    if (contradictory) {
      f.warnings.push_back("dropped clause '" + render_clause(clause) + "': contains a variable and its negation");
      continue;
    }
    f.clauses.push_back(std::move(clause));
  }
  if (f.clauses.empty()) throw DomainError("formula has no satisfiable clause");
  f.r = max_var + 1;
  if (options.arity) {
    if (*options.arity < f.r) throw DomainError("formula uses x" + std::to_string(f.r) + " beyond the arity");
    f.r = *options.arity;
  }
  if (options.require_full) {
    for (const auto& clause : f.clauses) {
      if (static_cast<int>(clause.size()) != f.r) {
        throw DomainError("clause '" + render_clause(clause) + "' does not mention every variable");
      }
    }
  }
  if (f.monotone) {
    // Absorption: a clause containing another clause never changes the value.
    std::vector<std::vector<Literal>> kept;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      const auto& ci = f.clauses[i];
      std::optional<std::size_t> absorber;
      for (std::size_t j = 0; j < f.clauses.size() && !absorber; ++j) {
        if (i == j) continue;
        const auto& cj = f.clauses[j];
        const bool subset = std::includes(ci.begin(), ci.end(), cj.begin(), cj.end());
        if (subset && (cj.size() < ci.size() || j < i)) absorber = j;
      }
      if (absorber) {
        f.warnings.push_back("dropped clause '" + render_clause(ci) + "': contains clause '" +
                             render_clause(f.clauses[*absorber]) + "'");
      } else {
        kept.push_back(ci);
      }
    }
    f.clauses = std::move(kept);
  }
  return f;
}

std::string render_dnf(const DnfFormula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (i) out += " | ";
    out += render_clause(f.clauses[i]);
  }
  return out;
}

void check_well_formed(const GeneralAssignment& asg) {
  for (int s : asg.sizes)
    if (s < 1) throw DomainError("feature alphabets must be nonempty");
  for (std::size_t v = 0; v < asg.sets.size(); ++v) {
    if (asg.sets[v].size() != asg.sizes.size()) {
      throw DomainError("vertex " + std::to_string(v) + " has the wrong number of feature sets");
    }
    for (std::size_t i = 0; i < asg.sizes.size(); ++i) {
      if (asg.sets[v][i].universe() != static_cast<std::size_t>(asg.sizes[i])) {
        throw DomainError("feature set " + std::to_string(i) + " of vertex " + std::to_string(v) +
                          " uses the wrong alphabet");
      }
    }
  }
}

GeneralAssignment from_cir(const Cir& r) {
  check_well_formed(r);
  GeneralAssignment asg;
  asg.sizes = {r.alpha, r.beta};
  for (int v = 0; v < r.vertex_count(); ++v) asg.sets.push_back({r.a[v], r.b[v]});
  return asg;
}

bool f_linked(const GeneralAssignment& asg, const DnfFormula& f, int u, int v) {
  std::vector<bool> x(asg.sizes.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = asg.sets[u][i].intersects(asg.sets[v][i]);
  return f.eval(x);
}

namespace {

void check_matches(const Graph& g, const GeneralAssignment& asg, const DnfFormula& f) {
  check_well_formed(asg);
  if (static_cast<int>(asg.sizes.size()) != f.r) {
    throw DomainError("assignment has " + std::to_string(asg.sizes.size()) + " feature types, formula has " +
                      std::to_string(f.r) + " variables");
  }
  if (asg.vertex_count() != g.n()) throw DomainError("assignment covers a different number of vertices");
}

}  // namespace

std::vector<Edge> verify_f(const Graph& g, const GeneralAssignment& asg, const DnfFormula& f) {
  check_matches(g, asg, f);
  std::vector<Edge> bad;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (f_linked(asg, f, u, v) != g.adjacent(u, v)) bad.push_back({u, v});
  return bad;
}

Score score_f(const Graph& g, const GeneralAssignment& asg, const DnfFormula& f) {
  const auto bad = verify_f(g, asg, f);
  Score s;
  s.total = static_cast<std::int64_t>(g.n()) * (g.n() - 1) / 2;
  s.matched = s.total - static_cast<std::int64_t>(bad.size());
  return s;
}

AnnealFResult anneal_f(const Graph& g, const DnfFormula& f, const std::vector<int>& sizes,
                       const AnnealParams& params) {
  const int n = g.n();
  const int r = static_cast<int>(sizes.size());
  if (n < 1) throw DomainError("anneal needs at least one vertex");
  if (r != f.r) throw DomainError("need one alphabet size per formula variable");
  for (int s : sizes)
    if (s < 1 || s > 64) throw DomainError("alphabet sizes must be in 1..64");
  if (!(params.c > 0)) throw DomainError("mixing exponent c must be positive");
  if (params.rounds && *params.rounds < 1) throw DomainError("rounds must be at least 1");
  const std::int64_t rounds = params.rounds ? *params.rounds : default_rounds(n, params.b);

  Rng rng(params.seed);
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) * r);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < r; ++i) masks[static_cast<std::size_t>(v) * r + i] = rng.nonempty_mask(sizes[i]);

  std::vector<bool> x(r);
  auto linked = [&](const std::uint64_t* mu, const std::uint64_t* mv) {
    for (int i = 0; i < r; ++i) x[i] = (mu[i] & mv[i]) != 0;
    return f.eval(x);
  };
  auto row_matches = [&](int u, const std::uint64_t* mu) {
    std::int64_t m = 0;
    for (int v = 0; v < n; ++v)
      if (v != u && linked(mu, &masks[static_cast<std::size_t>(v) * r]) == g.adjacent(u, v)) ++m;
    return m;
  };

  std::int64_t current = 0;
  for (int u = 0; u < n; ++u) current += row_matches(u, &masks[static_cast<std::size_t>(u) * r]);
  current /= 2;
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t best = current;
  auto best_masks = masks;
  std::vector<std::uint64_t> proposal(r);

  AnnealFResult result;
  std::int64_t round = 0;
  while (round < rounds) {
    if (params.stop_when_perfect && best == total) break;
    ++round;
    const int u = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    for (int i = 0; i < r; ++i) proposal[i] = rng.nonempty_mask(sizes[i]);
    const std::int64_t delta = row_matches(u, proposal.data()) - row_matches(u, &masks[static_cast<std::size_t>(u) * r]);
    if (rng.uniform_double() < std::min(1.0, std::exp(params.c * static_cast<double>(delta)))) {
      std::copy(proposal.begin(), proposal.end(), masks.begin() + static_cast<std::ptrdiff_t>(u) * r);
      current += delta;
      if (current > best) {
        best = current;
        best_masks = masks;
      }
    }
  }
  result.rounds = round;
  result.best.sizes = sizes;
  for (int v = 0; v < n; ++v) {
    std::vector<FeatureSet> sets;
    for (int i = 0; i < r; ++i) sets.push_back(FeatureSet::from_mask(sizes[i], best_masks[static_cast<std::size_t>(v) * r + i]));
    result.best.sets.push_back(std::move(sets));
  }
  result.best_score = score_f(g, result.best, f);
  if (result.best_score.matched != best) throw InternalError("incremental score drifted from the full rescore");
  return result;
}

std::int64_t g_f(const DnfFormula& f, const std::vector<int>& alphas) {
  if (!f.monotone) throw DomainError("g_f is defined for monotone formulas only");
  if (static_cast<int>(alphas.size()) != f.r) throw DomainError("need one alpha per formula variable");
  std::int64_t sum = 0;
  for (const auto& clause : f.clauses) {
    std::int64_t prod = 1;
    for (const auto& lit : clause) {
      prod *= alphas[lit.var];
      if (prod > std::numeric_limits<std::int64_t>::max() / 1024) return std::numeric_limits<std::int64_t>::max();
    }
    sum += prod;
    if (sum > std::numeric_limits<std::int64_t>::max() / 2) return std::numeric_limits<std::int64_t>::max();
  }
  return sum;
}

namespace {

// Compositions of `total` into alphas[i..] with parts in [1, cap], lexicographic.
bool first_feasible(const DnfFormula& f, int theta1, int cap, int total, std::size_t i, std::vector<int>& alphas) {
  const int slots = static_cast<int>(alphas.size() - i);
  if (slots == 1) {
    if (total < 1 || total > cap) return false;
    alphas[i] = total;
    return g_f(f, alphas) >= theta1;
  }
  for (int a = 1; a <= cap && total - a >= slots - 1; ++a) {
    if (total - a > static_cast<long long>(cap) * (slots - 1)) continue;
    alphas[i] = a;
    if (first_feasible(f, theta1, cap, total - a, i + 1, alphas)) return true;
  }
  return false;
}

}  // namespace

IpBound ip_lower_bound(const DnfFormula& f, int theta1, std::optional<int> cap) {
  if (!f.monotone) throw DomainError("the integer bound is defined for monotone formulas only");
  if (theta1 < 1) throw DomainError("theta1 must be at least 1");
  const int c = cap.value_or(theta1 + 1);
  if (c < 1) throw DomainError("cap must be at least 1");
  const int r = f.r;
  std::vector<int> alphas(r, 1);
  for (long long total = r; total <= static_cast<long long>(r) * c; ++total) {
    if (first_feasible(f, theta1, c, static_cast<int>(total), 0, alphas)) return {total, alphas};
  }
  throw DomainError("no feasible alpha vector within the cap");
}

}  // namespace coint
