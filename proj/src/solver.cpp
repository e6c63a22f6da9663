#include "cointersect/solver.hpp"

#include <algorithm>
#include <cstdlib>

#include "cointersect/error.hpp"

namespace coint {

const char* status_name(SatStatus s) {
  switch (s) {
    case SatStatus::sat: return "sat";
    case SatStatus::unsat: return "unsat";
    case SatStatus::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Literals are 2*var + sign, var 0-based; sign 1 means negated.
inline int var_of(int lit) { return lit >> 1; }
inline int neg(int lit) { return lit ^ 1; }

constexpr signed char kTrue = 1;
constexpr signed char kFalse = -1;
constexpr signed char kUndef = 0;

struct Clause {
  std::vector<int> lits;
  bool learnt = false;
  bool deleted = false;
  int lbd = 0;
  double activity = 0.0;
};

struct Watcher {
  int cref;
  int blocker;
};

// Max-heap of variables keyed by activity.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act), pos_(act.size(), -1) {}

  bool empty() const { return heap_.empty(); }
  bool contains(int v) const { return pos_[v] >= 0; }

  void insert(int v) {
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }

  void increased(int v) {
    if (contains(v)) up(pos_[v]);
  }

  int pop() {
    const int top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool before(int a, int b) const { return act_[a] > act_[b] || (act_[a] == act_[b] && a < b); }

  void up(int i) {
    const int v = heap_[i];
    while (i > 0) {
      const int p = (i - 1) / 2;
      if (!before(v, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void down(int i) {
    const int v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && before(heap_[c + 1], heap_[c])) ++c;
      if (!before(heap_[c], v)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1.0;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

class Cdcl {
 public:
  Cdcl(int vars, const SolveLimits& limits)
      : nvars_(vars),
        limits_(limits),
        assign_(vars, kUndef),
        level_(vars, 0),
        reason_(vars, -1),
        polarity_(vars, 1),
        activity_(vars, 0.0),
        seen_(vars, 0),
        watches_(2 * static_cast<std::size_t>(vars)),
        heap_(activity_) {
    for (int v = 0; v < vars; ++v) heap_.insert(v);
  }

  // Returns false when the formula is trivially unsatisfiable.
  bool add_clause(const std::vector<int>& dimacs) {
    std::vector<int> lits;
    for (int d : dimacs) {
      if (d == 0 || std::abs(d) > nvars_) throw DomainError("clause literal out of range");
      lits.push_back(2 * (std::abs(d) - 1) + (d < 0 ? 1 : 0));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i)
      if (lits[i] == neg(lits[i - 1])) return true;  // tautology
    // Drop literals already false at level 0; satisfied clauses vanish.
    std::vector<int> kept;
    for (int l : lits) {
      if (value(l) == kTrue) return true;
      if (value(l) == kUndef) kept.push_back(l);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      enqueue(kept[0], -1);
      return propagate() < 0;
    }
    attach(new_clause(std::move(kept), false, 0));
    return true;
  }

  SatStatus run(SolveStats& stats) {
    if (propagate() >= 0) return SatStatus::unsat;
    int restart_index = 0;
    std::uint64_t next_reduce = 2000;
    for (;;) {
      const double budget = luby(2.0, restart_index++) * 100.0;
      const SatStatus s = search(static_cast<std::uint64_t>(budget), next_reduce, stats);
      if (s != SatStatus::unknown) return s;
      if (out_of_budget(stats)) return SatStatus::unknown;
      ++stats.restarts;
    }
  }

  Model model() const {
    Model m(static_cast<std::size_t>(nvars_) + 1, false);
    for (int v = 0; v < nvars_; ++v) m[v + 1] = assign_[v] == kTrue;
    return m;
  }

 private:
  signed char value(int lit) const {
    const signed char a = assign_[var_of(lit)];
    if (a == kUndef) return kUndef;
    return (lit & 1) ? static_cast<signed char>(-a) : a;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  int new_clause(std::vector<int> lits, bool learnt, int lbd) {
    Clause c;
    c.lits = std::move(lits);
    c.learnt = learnt;
    c.lbd = lbd;
    clauses_.push_back(std::move(c));
    return static_cast<int>(clauses_.size()) - 1;
  }

  void attach(int cref) {
    const auto& c = clauses_[cref];
    watches_[c.lits[0]].push_back({cref, c.lits[1]});
    watches_[c.lits[1]].push_back({cref, c.lits[0]});
  }

  void enqueue(int lit, int reason) {
    const int v = var_of(lit);
    assign_[v] = (lit & 1) ? kFalse : kTrue;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  // Returns the conflicting clause, or -1.
  int propagate() {
    int conflict = -1;
    while (qhead_ < trail_.size()) {
      const int false_lit = neg(trail_[qhead_++]);
      auto& ws = watches_[false_lit];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        const Watcher w = ws[i];
        if (value(w.blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        Clause& c = clauses_[w.cref];
        if (c.deleted) {
          ++i;
          continue;
        }
        if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
        ++i;
        const int first = c.lits[0];
        const Watcher nw{w.cref, first};
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = nw;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) != kFalse) {
            std::swap(c.lits[1], c.lits[k]);
            watches_[c.lits[1]].push_back(nw);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = nw;
        if (value(first) == kFalse) {
          conflict = w.cref;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
          ++propagations_;
        }
      }
      ws.resize(j);
      if (conflict >= 0) break;
    }
    return conflict;
  }

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.increased(v);
  }

  void bump_clause(Clause& c) {
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
      for (auto& cl : clauses_)
        if (cl.learnt) cl.activity *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  // Literal q is implied by literals that are already in the clause.
  bool redundant(int q) const {
    const int r = reason_[var_of(q)];
    if (r < 0) return false;
    for (std::size_t k = 1; k < clauses_[r].lits.size(); ++k) {
      const int v = var_of(clauses_[r].lits[k]);
      if (!seen_[v] && level_[v] > 0) return false;
    }
    return true;
  }

  void analyze(int conflict, std::vector<int>& learnt, int& back_level, int& lbd) {
    learnt.assign(1, 0);
    int path = 0;
    int p = -1;
    int index = static_cast<int>(trail_.size()) - 1;
    int cref = conflict;
    do {
      Clause& c = clauses_[cref];
      if (c.learnt) bump_clause(c);
      for (std::size_t k = (p < 0 ? 0 : 1); k < c.lits.size(); ++k) {
        const int q = c.lits[k];
        const int v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        bump_var(v);
        seen_[v] = 1;
        if (level_[v] >= decision_level()) {
          ++path;
        } else {
          learnt.push_back(q);
        }
      }
      while (!seen_[var_of(trail_[index--])]) {
      }
      p = trail_[index + 1];
      cref = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = neg(p);

    std::vector<int> marked(learnt.begin() + 1, learnt.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i)
      if (!redundant(learnt[i])) learnt[j++] = learnt[i];
    learnt.resize(j);
    for (int q : marked) seen_[var_of(q)] = 0;

    back_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      back_level = level_[var_of(learnt[1])];
    }
    std::vector<int> levels;
    for (int q : learnt) levels.push_back(level_[var_of(q)]);
    std::sort(levels.begin(), levels.end());
    lbd = static_cast<int>(std::unique(levels.begin(), levels.end()) - levels.begin());
  }

  void backtrack(int level) {
    if (decision_level() <= level) return;
    for (std::size_t i = trail_.size(); i > trail_lim_[level]; --i) {
      const int v = var_of(trail_[i - 1]);
      polarity_[v] = static_cast<signed char>(trail_[i - 1] & 1);
      assign_[v] = kUndef;
      reason_[v] = -1;
      heap_.insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  bool locked(int cref) const {
    const Clause& c = clauses_[cref];
    const int v = var_of(c.lits[0]);
    return reason_[v] == cref && value(c.lits[0]) == kTrue;
  }

  void reduce_db() {
    std::vector<int> learnts;
    for (int i = 0; i < static_cast<int>(clauses_.size()); ++i)
      if (clauses_[i].learnt && !clauses_[i].deleted) learnts.push_back(i);
    std::sort(learnts.begin(), learnts.end(), [&](int a, int b) {
      const Clause& x = clauses_[a];
      const Clause& y = clauses_[b];
      if (x.lbd != y.lbd) return x.lbd > y.lbd;
      if (x.activity != y.activity) return x.activity < y.activity;
      return a < b;
    });
    const std::size_t limit = learnts.size() / 2;
    for (std::size_t i = 0; i < limit; ++i) {
      Clause& c = clauses_[learnts[i]];
      if (c.lbd <= 2 || c.lits.size() <= 2 || locked(learnts[i])) continue;
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
    }
    for (auto& ws : watches_) {
      ws.erase(std::remove_if(ws.begin(), ws.end(), [&](const Watcher& w) { return clauses_[w.cref].deleted; }),
               ws.end());
    }
  }

  bool out_of_budget(const SolveStats& stats) const {
    if (limits_.max_conflicts && stats.conflicts >= *limits_.max_conflicts) return true;
    if (limits_.cancel && limits_.cancel->load(std::memory_order_relaxed)) return true;
    if (limits_.deadline && std::chrono::steady_clock::now() >= *limits_.deadline) return true;
    return false;
  }

  SatStatus search(std::uint64_t budget, std::uint64_t& next_reduce, SolveStats& stats) {
    std::uint64_t local = 0;
    std::vector<int> learnt;
    for (;;) {
      const int conflict = propagate();
      if (conflict >= 0) {
        ++stats.conflicts;
        ++local;
        if (decision_level() == 0) return SatStatus::unsat;
        int back_level = 0;
        int lbd = 0;
        analyze(conflict, learnt, back_level, lbd);
        backtrack(back_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          const int cref = new_clause(learnt, true, lbd);
          attach(cref);
          bump_clause(clauses_[cref]);
          enqueue(learnt[0], cref);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;
        if (stats.conflicts >= next_reduce) {
          reduce_db();
          next_reduce = stats.conflicts + 2000 + 300 * (++reductions_);
        }
        if ((stats.conflicts & 63) == 0 && out_of_budget(stats)) return SatStatus::unknown;
        continue;
      }
      if (local >= budget) {
        backtrack(0);
        return SatStatus::unknown;
      }
      int next = -1;
      while (!heap_.empty()) {
        const int v = heap_.pop();
        if (assign_[v] == kUndef) {
          next = v;
          break;
        }
      }
      if (next < 0) {
        stats.propagations = propagations_;
        return SatStatus::sat;
      }
      ++stats.decisions;
      if ((stats.decisions & 4095) == 0 && out_of_budget(stats)) return SatStatus::unknown;
      trail_lim_.push_back(trail_.size());
      enqueue(2 * next + polarity_[next], -1);
    }
  }

  int nvars_;
  SolveLimits limits_;
  std::vector<signed char> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<signed char> polarity_;  // 1 = last value false
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<Clause> clauses_;
  std::vector<int> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  VarHeap heap_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  std::uint64_t reductions_ = 0;
  std::uint64_t propagations_ = 0;
};

}  // namespace

SolveResult solve(int var_count, const std::vector<std::vector<int>>& clauses, const SolveLimits& limits) {
  if (var_count < 0) throw DomainError("negative variable count");
  SolveResult result;
  Cdcl solver(var_count, limits);
  for (const auto& c : clauses) {
    // The empty clause is unsatisfiable on its own.
    if (c.empty() || !solver.add_clause(c)) {
      result.status = SatStatus::unsat;
      return result;
    }
  }
  result.status = solver.run(result.stats);
  if (result.status == SatStatus::sat) result.model = solver.model();
  return result;
}

SolveResult solve(const CnfInstance& c, const SolveLimits& limits) {
  SolveResult r = solve(c.var_count, c.clauses, limits);
  if (r.status == SatStatus::sat && !satisfies(c, r.model)) throw InternalError("solver returned a non-model");
  return r;
}

}  // namespace coint
