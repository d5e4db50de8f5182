#include "lassobmc/circuit.hpp"

#include <algorithm>

#include "lassobmc/errors.hpp"

namespace lbmc {

Circuit::Circuit() { nodes_.push_back(Node{}); }

Lit Circuit::input(int var) {
  if (var <= 0) throw InternalError("circuit input needs a positive CNF variable");
  nodes_.push_back(Node{var, {}});
  return static_cast<Lit>(2 * (nodes_.size() - 1));
}

Lit Circuit::land(std::vector<Lit> kids) {
  std::vector<Lit> flat;
  flat.reserve(kids.size());
  for (Lit k : kids) {
    if (k == kTrue) continue;
    if (k == kFalse) return kFalse;
    const Node& n = nodes_[static_cast<std::size_t>(k >> 1)];
    if ((k & 1) == 0 && n.var == 0 && !n.kids.empty())
      flat.insert(flat.end(), n.kids.begin(), n.kids.end());
    else
      flat.push_back(k);
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  for (std::size_t i = 1; i < flat.size(); ++i)
    if ((flat[i] ^ 1) == flat[i - 1]) return kFalse;
  if (flat.empty()) return kTrue;
  if (flat.size() == 1) return flat[0];
  auto it = gates_.find(flat);
  if (it != gates_.end()) return 2 * it->second;
  auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{0, flat});
  gates_.emplace(std::move(flat), id);
  return 2 * id;
}

Lit Circuit::lor(std::vector<Lit> kids) {
  for (Lit& k : kids) k = lit_not(k);
  return lit_not(land(std::move(kids)));
}

std::size_t Circuit::gate_count() const { return gates_.size(); }

bool Circuit::eval(Lit l, std::span<const bool> var_values) const {
  auto top = static_cast<std::size_t>(l >> 1);
  std::vector<char> val(top + 1, 0);
  for (std::size_t i = 1; i <= top; ++i) {
    const Node& n = nodes_[i];
    if (n.var != 0) {
      val[i] = var_values[static_cast<std::size_t>(n.var)];
      continue;
    }
    bool v = true;
    for (Lit k : n.kids) {
      bool kv = val[static_cast<std::size_t>(k >> 1)] != 0;
      if (k & 1) kv = !kv;
      if (!kv) {
        v = false;
        break;
      }
    }
    val[i] = v;
  }
  bool v = val[top] != 0;
  return (l & 1) ? !v : v;
}

int Circuit::define(Lit l, Cnf& cnf) {
  auto idx = static_cast<std::size_t>(l >> 1);
  if (idx == 0) throw InternalError("constant reached Tseitin encoding");
  const Node& n = nodes_[idx];
  int v = n.var;
  if (v == 0) {
    if (tseitin_.size() < nodes_.size()) tseitin_.resize(nodes_.size(), 0);
    v = tseitin_[idx];
    if (v == 0) {
      std::vector<int> defs;
      defs.reserve(n.kids.size());
      for (Lit k : n.kids) defs.push_back(define(k, cnf));
      v = cnf.new_var();
      tseitin_[idx] = v;
      std::vector<int> back{v};
      for (int d : defs) {
        cnf.add({-v, d});
        back.push_back(-d);
      }
      cnf.add(std::move(back));
    }
  }
  return (l & 1) ? -v : v;
}

void Circuit::assert_into(Lit root, Cnf& cnf) {
  if (root == kTrue) return;
  if (root == kFalse) {
    cnf.add({});
    return;
  }
  const Node& n = nodes_[static_cast<std::size_t>(root >> 1)];
  if (n.var != 0) {
    cnf.add({(root & 1) ? -n.var : n.var});
    return;
  }
  if ((root & 1) == 0) {
    std::vector<Lit> kids = n.kids;
    for (Lit k : kids) assert_into(k, cnf);
    return;
  }
  // not (a and b ...) == (not a) or (not b) ...
  std::vector<Lit> kids = n.kids;
  std::vector<int> clause;
  clause.reserve(kids.size());
  for (Lit k : kids) clause.push_back(define(lit_not(k), cnf));
  cnf.add(std::move(clause));
}

}  // namespace lbmc
