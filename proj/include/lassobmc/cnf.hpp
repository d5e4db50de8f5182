#pragma once

#include <vector>

namespace lbmc {

/// Propositional CNF over variables 1..num_vars, DIMACS literal convention.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int new_var() { return ++num_vars; }
  void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
  void append(const Cnf& other) {
    clauses.insert(clauses.end(), other.clauses.begin(), other.clauses.end());
  }
};

}  // namespace lbmc
