#include "lassobmc/trace.hpp"

#include <stdexcept>

namespace lbmc {

std::vector<std::optional<int>> TraceAxioms::loop_choices() const {
  std::vector<std::optional<int>> out{std::nullopt};
  if (allow_loop)
    for (int l = 0; l < k; ++l) out.emplace_back(l);
  return out;
}

std::optional<int> TraceAxioms::successor(std::optional<int> loop, int i) const {
  if (i + 1 < k) return i + 1;
  return loop;
}

bool TraceAxioms::reaches(std::optional<int> loop, int i, int j, bool reflexive) const {
  if (reflexive && i == j) return true;
  if (i < j) return true;
  // Going round the back edge reaches every state from the loop target on.
  return loop.has_value() && *loop <= j;
}

TraceAxioms axiomatize_trace(int k, bool finite_traces) {
  if (k < 1) throw std::invalid_argument("trace length must be at least 1");
  return TraceAxioms{k, !finite_traces};
}

}  // namespace lbmc
