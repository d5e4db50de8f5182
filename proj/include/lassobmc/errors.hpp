#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lassobmc/ast.hpp"

namespace lbmc {

/// Diagnostic about the user's specification, carrying a source position.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& what, SrcPos pos)
      : std::runtime_error(format(what, pos)), pos_(pos) {}

  [[nodiscard]] SrcPos pos() const { return pos_; }

 private:
  static std::string format(const std::string& what, SrcPos pos) {
    if (pos.line == 0) return what;
    return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + what;
  }
  SrcPos pos_;
};

class ParseError : public SpecError {
 public:
  ParseError(const std::string& what, SrcPos pos, std::vector<std::string> expected)
      : SpecError(what, pos), expected_(std::move(expected)) {}

  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class ResolveError : public SpecError {
 public:
  using SpecError::SpecError;
};

/// Scopes that cannot be satisfied or are malformed.
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed its candidate cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// External solver produced unusable output or a wrong model.
class ExternalSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant; indicates a bug in the pipeline.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lbmc
