#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lassobmc/ast.hpp"
#include "lassobmc/embed.hpp"

namespace lbmc {

/// trace.als: util/ordering with an optional back loop from the last state.
std::string emit_trace_module();

struct AlloyOptions {
  Idiom idiom = Idiom::Local;
  int default_state_scope = 4;  // for commands without a State bound
};

/// The spec as an Alloy module opening trace[State]. Mutable fields gain an
/// explicit State column; facts become their embeddings at `first`,
/// assertions the check translation with negations pushed to the atoms.
/// Commands keep their scopes and get an exact State scope.
std::string emit_alloy_spec(const Spec& resolved, const std::string& module_name, const AlloyOptions& opts = {});

/// Recursive-descent syntax check for the Alloy subset this tool emits
/// (and a bit more). Returns diagnostics `line:col: message`; empty when ok.
std::vector<std::string> validate_alloy(std::string_view text);

}  // namespace lbmc
