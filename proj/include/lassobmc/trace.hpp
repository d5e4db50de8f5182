#pragma once

#include <optional>
#include <vector>

namespace lbmc {

/// Shape of the bounded trace: `k` ordered states s0..s(k-1), `next` the
/// successor order plus, when a loop is selected, one back edge from the
/// last state to s(loop). The loop choice is the only symbolic part.
struct TraceAxioms {
  int k = 1;
  bool allow_loop = true;  // false reproduces a plain total order

  /// All loop alternatives: none first, then 0..k-1 when loops are allowed.
  [[nodiscard]] std::vector<std::optional<int>> loop_choices() const;

  [[nodiscard]] std::optional<int> successor(std::optional<int> loop, int i) const;
  /// (i, j) in ^next, or in *next when `reflexive`.
  [[nodiscard]] bool reaches(std::optional<int> loop, int i, int j, bool reflexive) const;
};

/// Throws std::invalid_argument when k < 1.
TraceAxioms axiomatize_trace(int k, bool finite_traces = false);

}  // namespace lbmc
