#include "lassobmc/sat.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "lassobmc/errors.hpp"

namespace lbmc {

namespace {

// Internal literal: 2 * var + neg, var in [0, n).
using ILit = int;
inline ILit mk_lit(int dimacs) { return dimacs > 0 ? 2 * (dimacs - 1) : 2 * (-dimacs - 1) + 1; }
inline int var_of(ILit l) { return l >> 1; }
inline ILit neg(ILit l) { return l ^ 1; }

constexpr int kNoReason = -1;
enum : signed char { kUndef = 0, kTrueV = 1, kFalseV = -1 };

struct Clause {
  std::vector<ILit> lits;
  bool learnt = false;
  bool deleted = false;
  int lbd = 0;
  double activity = 0;
};

struct Watch {
  int cref;
  ILit blocker;
};

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

class Cdcl {
 public:
  Cdcl(const Cnf& cnf, const SolverConfig& cfg) : n_(cnf.num_vars), cfg_(cfg) {
    auto n = static_cast<std::size_t>(n_);
    assigns_.assign(n, kUndef);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    phase_.assign(n, 0);
    activity_.assign(n, 0);
    seen_.assign(n, 0);
    heap_pos_.assign(n, -1);
    watches_.resize(2 * n);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> jitter(0, 1e-5);
    for (int v = 0; v < n_; ++v) {
      activity_[static_cast<std::size_t>(v)] = jitter(rng);
      heap_insert(v);
    }
    for (const auto& c : cnf.clauses) {
      if (!add_input(c)) {
        ok_ = false;
        break;
      }
    }
  }

  SatStatus run() {
    if (!ok_) return SatStatus::Unsat;
    auto start = std::chrono::steady_clock::now();
    int restart_index = 0;
    std::int64_t restart_limit = static_cast<std::int64_t>(luby(2, restart_index) * 100);
    std::int64_t since_restart = 0;
    max_learnts_ = std::max<std::size_t>(2000, clauses_.size() / 3);
    for (;;) {
      int confl = propagate();
      if (confl != kNoReason) {
        ++stats.conflicts;
        ++since_restart;
        if (decision_level() == 0) return SatStatus::Unsat;
        std::vector<ILit> learnt;
        int bt = analyze(confl, learnt);
        cancel_until(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          int cref = static_cast<int>(clauses_.size());
          Clause c;
          c.lits = std::move(learnt);
          c.learnt = true;
          c.lbd = lbd(c.lits);
          clauses_.push_back(std::move(c));
          attach(cref);
          ++num_learnts_;
          bump_clause(cref);
          enqueue(clauses_[static_cast<std::size_t>(cref)].lits[0], cref);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;
        if (cfg_.conflict_budget >= 0 && stats.conflicts >= cfg_.conflict_budget) return SatStatus::Unknown;
        if (cfg_.time_budget_seconds > 0 && (stats.conflicts & 255) == 0) {
          std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
          if (el.count() > cfg_.time_budget_seconds) return SatStatus::Unknown;
        }
        continue;
      }
      if (since_restart >= restart_limit) {
        ++stats.restarts;
        since_restart = 0;
        restart_limit = static_cast<std::int64_t>(luby(2, ++restart_index) * 100);
        cancel_until(0);
        if (!simplify()) return SatStatus::Unsat;
        continue;
      }
      int v = pick_branch();
      if (v < 0) return SatStatus::Sat;
      ++stats.decisions;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(2 * v + (phase_[static_cast<std::size_t>(v)] ? 0 : 1), kNoReason);
    }
  }

  std::vector<bool> model() const {
    std::vector<bool> m(static_cast<std::size_t>(n_) + 1, false);
    for (int v = 0; v < n_; ++v) m[static_cast<std::size_t>(v) + 1] = assigns_[static_cast<std::size_t>(v)] == kTrueV;
    return m;
  }

  SolverStats stats;

 private:
  signed char value(ILit l) const {
    signed char a = assigns_[static_cast<std::size_t>(var_of(l))];
    return (l & 1) ? static_cast<signed char>(-a) : a;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  bool add_input(const std::vector<int>& dimacs) {
    std::vector<ILit> lits;
    for (int d : dimacs) {
      if (d == 0 || std::abs(d) > n_) throw std::invalid_argument("clause literal out of range");
      lits.push_back(mk_lit(d));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<ILit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == neg(lits[i])) return true;  // tautology
      signed char val = value(lits[i]);
      if (val == kTrueV) return true;
      if (val == kUndef) kept.push_back(lits[i]);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      return propagate() == kNoReason;
    }
    int cref = static_cast<int>(clauses_.size());
    Clause c;
    c.lits = std::move(kept);
    clauses_.push_back(std::move(c));
    attach(cref);
    return true;
  }

  void attach(int cref) {
    const auto& c = clauses_[static_cast<std::size_t>(cref)].lits;
    watches_[static_cast<std::size_t>(neg(c[0]))].push_back({cref, c[1]});
    watches_[static_cast<std::size_t>(neg(c[1]))].push_back({cref, c[0]});
  }

  void enqueue(ILit l, int reason) {
    auto v = static_cast<std::size_t>(var_of(l));
    assigns_[v] = (l & 1) ? kFalseV : kTrueV;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns a conflicting clause or kNoReason.
  int propagate() {
    int confl = kNoReason;
    while (qhead_ < trail_.size()) {
      ILit p = trail_[qhead_++];  // p became true; visit clauses watching not p
      ++stats.propagations;
      auto& ws = watches_[static_cast<std::size_t>(p)];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        Watch w = ws[i];
        if (value(w.blocker) == kTrueV) {
          ws[j++] = ws[i++];
          continue;
        }
        auto& lits = clauses_[static_cast<std::size_t>(w.cref)].lits;
        ILit false_lit = neg(p);
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        ++i;
        ILit first = lits[0];
        if (first != w.blocker && value(first) == kTrueV) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) != kFalseV) {
            std::swap(lits[1], lits[k]);
            watches_[static_cast<std::size_t>(neg(lits[1]))].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (value(first) == kFalseV) {
          confl = w.cref;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (confl != kNoReason) break;
    }
    return confl;
  }

  int analyze(int confl, std::vector<ILit>& out) {
    out.clear();
    out.push_back(0);  // slot for the asserting literal
    int pending = 0;
    ILit p = -1;
    std::size_t idx = trail_.size();
    std::vector<int> touched;
    for (;;) {
      Clause& c = clauses_[static_cast<std::size_t>(confl)];
      if (c.learnt) bump_clause(confl);
      for (std::size_t k = (p == -1 ? 0 : 1); k < c.lits.size(); ++k) {
        ILit q = c.lits[k];
        auto v = static_cast<std::size_t>(var_of(q));
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        touched.push_back(static_cast<int>(v));
        bump_var(static_cast<int>(v));
        if (level_[v] >= decision_level())
          ++pending;
        else
          out.push_back(q);
      }
      do {
        p = trail_[--idx];
      } while (!seen_[static_cast<std::size_t>(var_of(p))]);
      confl = reason_[static_cast<std::size_t>(var_of(p))];
      --pending;
      if (pending == 0) break;
      // Reason clauses keep the implied literal in position 0.
    }
    out[0] = neg(p);

    // Local minimization: drop literals implied by others already present.
    std::size_t keep = 1;
    for (std::size_t k = 1; k < out.size(); ++k) {
      auto v = static_cast<std::size_t>(var_of(out[k]));
      int r = reason_[v];
      bool redundant = r != kNoReason;
      if (redundant) {
        const auto& rl = clauses_[static_cast<std::size_t>(r)].lits;
        for (std::size_t m = 1; m < rl.size(); ++m) {
          auto u = static_cast<std::size_t>(var_of(rl[m]));
          if (!seen_[u] && level_[u] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) out[keep++] = out[k];
    }
    out.resize(keep);
    for (int v : touched) seen_[static_cast<std::size_t>(v)] = 0;

    if (out.size() == 1) return 0;
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < out.size(); ++k)
      if (level_[static_cast<std::size_t>(var_of(out[k]))] > level_[static_cast<std::size_t>(var_of(out[max_i]))])
        max_i = k;
    std::swap(out[1], out[max_i]);
    return level_[static_cast<std::size_t>(var_of(out[1]))];
  }

  int lbd(const std::vector<ILit>& lits) {
    std::vector<int> levels;
    for (ILit l : lits) levels.push_back(level_[static_cast<std::size_t>(var_of(l))]);
    std::sort(levels.begin(), levels.end());
    return static_cast<int>(std::unique(levels.begin(), levels.end()) - levels.begin());
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    auto lim = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]);
    for (std::size_t i = trail_.size(); i-- > lim;) {
      auto v = static_cast<std::size_t>(var_of(trail_[i]));
      phase_[v] = assigns_[v] == kTrueV;
      assigns_[v] = kUndef;
      reason_[v] = kNoReason;
      if (heap_pos_[v] < 0) heap_insert(static_cast<int>(v));
    }
    trail_.resize(lim);
    trail_lim_.resize(static_cast<std::size_t>(lvl));
    qhead_ = trail_.size();
  }

  // At level 0 with propagation complete: drop satisfied clauses and false
  // literals, reduce learnts when over budget, rebuild watches.
  bool simplify() {
    if (propagate() != kNoReason) return false;
    for (ILit l : trail_) reason_[static_cast<std::size_t>(var_of(l))] = kNoReason;
    if (num_learnts_ > max_learnts_) reduce();
    for (auto& c : clauses_) {
      if (c.deleted) continue;
      bool sat = false;
      std::size_t keep = 0;
      for (ILit l : c.lits) {
        signed char v = value(l);
        if (v == kTrueV) {
          sat = true;
          break;
        }
        if (v == kUndef) c.lits[keep++] = l;
      }
      if (sat) {
        c.deleted = true;
        if (c.learnt) --num_learnts_;
        continue;
      }
      c.lits.resize(keep);
      if (keep < 2) throw InternalError("unpropagated clause at level 0");
    }
    std::vector<Clause> live;
    live.reserve(clauses_.size());
    for (auto& c : clauses_)
      if (!c.deleted) live.push_back(std::move(c));
    clauses_ = std::move(live);
    for (auto& ws : watches_) ws.clear();
    for (std::size_t i = 0; i < clauses_.size(); ++i) attach(static_cast<int>(i));
    return true;
  }

  void reduce() {
    std::vector<Clause*> cand;
    for (auto& c : clauses_)
      if (c.learnt && !c.deleted && c.lbd > 2) cand.push_back(&c);
    std::sort(cand.begin(), cand.end(), [](const Clause* a, const Clause* b) {
      if (a->lbd != b->lbd) return a->lbd > b->lbd;
      return a->activity < b->activity;
    });
    for (std::size_t i = 0; i < cand.size() / 2; ++i) {
      cand[i]->deleted = true;
      --num_learnts_;
    }
    max_learnts_ = max_learnts_ + max_learnts_ / 10;
  }

  void bump_var(int v) {
    auto sv = static_cast<std::size_t>(v);
    activity_[sv] += var_inc_;
    if (activity_[sv] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_pos_[sv] >= 0) sift_up(heap_pos_[sv]);
  }

  void bump_clause(int cref) {
    auto& c = clauses_[static_cast<std::size_t>(cref)];
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
      for (auto& d : clauses_) d.activity *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  int pick_branch() {
    while (!heap_.empty()) {
      int v = heap_pop();
      if (assigns_[static_cast<std::size_t>(v)] == kUndef) return v;
    }
    return -1;
  }

  // Max-heap on activity.
  bool before(int a, int b) const {
    return activity_[static_cast<std::size_t>(a)] > activity_[static_cast<std::size_t>(b)];
  }
  void heap_insert(int v) {
    heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(static_cast<int>(heap_.size()) - 1);
  }
  int heap_pop() {
    int top = heap_[0];
    heap_pos_[static_cast<std::size_t>(top)] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_pos_[static_cast<std::size_t>(last)] = 0;
      sift_down(0);
    }
    return top;
  }
  void sift_up(int i) {
    int v = heap_[static_cast<std::size_t>(i)];
    while (i > 0) {
      int parent = (i - 1) / 2;
      int pv = heap_[static_cast<std::size_t>(parent)];
      if (!before(v, pv)) break;
      heap_[static_cast<std::size_t>(i)] = pv;
      heap_pos_[static_cast<std::size_t>(pv)] = i;
      i = parent;
    }
    heap_[static_cast<std::size_t>(i)] = v;
    heap_pos_[static_cast<std::size_t>(v)] = i;
  }
  void sift_down(int i) {
    int v = heap_[static_cast<std::size_t>(i)];
    auto size = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && before(heap_[static_cast<std::size_t>(child) + 1], heap_[static_cast<std::size_t>(child)]))
        ++child;
      int cv = heap_[static_cast<std::size_t>(child)];
      if (!before(cv, v)) break;
      heap_[static_cast<std::size_t>(i)] = cv;
      heap_pos_[static_cast<std::size_t>(cv)] = i;
      i = child;
    }
    heap_[static_cast<std::size_t>(i)] = v;
    heap_pos_[static_cast<std::size_t>(v)] = i;
  }

  int n_;
  SolverConfig cfg_;
  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<signed char> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<char> phase_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<ILit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1;
  double cla_inc_ = 1;
  std::size_t num_learnts_ = 0;
  std::size_t max_learnts_ = 2000;
};

}  // namespace

bool satisfies(const Cnf& cnf, const std::vector<bool>& model) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int l : c) {
      auto v = static_cast<std::size_t>(std::abs(l));
      if (v >= model.size()) return false;
      if (model[v] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

SolveResult solve(const Cnf& cnf, const SolverConfig& config) {
  Cdcl s(cnf, config);
  SolveResult r;
  r.status = s.run();
  r.stats = s.stats;
  if (r.status == SatStatus::Sat) {
    r.model = s.model();
    if (!satisfies(cnf, r.model)) throw InternalError("CDCL produced a model that violates a clause");
  }
  return r;
}

std::string export_dimacs(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& c : cnf.clauses) {
    for (int l : c) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t expected = 0;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> expected;
      if (!ls || fmt != "cnf") throw std::invalid_argument("bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS clause before header");
    int l = 0;
    while (ls >> l) {
      if (l == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::abs(l) > cnf.num_vars) throw std::invalid_argument("DIMACS literal out of range");
        cur.push_back(l);
      }
    }
    if (!ls.eof()) throw std::invalid_argument("bad DIMACS token");
  }
  if (!header) throw std::invalid_argument("missing DIMACS header");
  if (!cur.empty()) throw std::invalid_argument("unterminated DIMACS clause");
  if (cnf.clauses.size() != expected) throw std::invalid_argument("DIMACS clause count mismatch");
  return cnf;
}

SolveResult import_external_result(std::string_view text, const Cnf& cnf) {
  std::istringstream in{std::string(text)};
  std::string line;
  SolveResult r;
  bool have_status = false;
  std::vector<bool> model(static_cast<std::size_t>(cnf.num_vars) + 1, false);
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      std::string st = line.substr(2);
      while (!st.empty() && (st.back() == '\r' || st.back() == ' ')) st.pop_back();
      if (st == "SATISFIABLE")
        r.status = SatStatus::Sat;
      else if (st == "UNSATISFIABLE")
        r.status = SatStatus::Unsat;
      else if (st == "UNKNOWN")
        r.status = SatStatus::Unknown;
      else
        throw ExternalSolverError("unrecognized solver status '" + st + "'");
      have_status = true;
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      std::istringstream ls(line.substr(1));
      std::string tok;
      while (ls >> tok) {
        int l = 0;
        try {
          std::size_t used = 0;
          l = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw ExternalSolverError("malformed model literal '" + tok + "'");
        }
        if (l == 0) continue;
        if (std::abs(l) > cnf.num_vars) throw ExternalSolverError("model literal out of range: " + tok);
        model[static_cast<std::size_t>(std::abs(l))] = l > 0;
      }
    }
  }
  if (!have_status) throw ExternalSolverError("solver output has no status line");
  if (r.status == SatStatus::Sat) {
    if (!satisfies(cnf, model)) throw ExternalSolverError("external model violates a clause");
    r.model = std::move(model);
  }
  return r;
}

SolveResult solve_external(const Cnf& cnf, const std::string& command) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path path = fs::temp_directory_path() /
                  ("lassobmc_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".cnf");
  {
    std::ofstream out(path);
    out << export_dimacs(cnf);
    if (!out) throw ExternalSolverError("cannot write " + path.string());
  }
  std::string cmd = command + " '" + path.string() + "' 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    fs::remove(path);
    throw ExternalSolverError("cannot start external solver: " + command);
  }
  std::string output;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  pclose(pipe);
  std::error_code ec;
  fs::remove(path, ec);
  return import_external_result(output, cnf);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("LASSO_BMC_SEED");
  if (!s || !*s) return fallback;
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used, 0);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

}  // namespace lbmc
