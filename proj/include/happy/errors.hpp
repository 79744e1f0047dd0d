#pragma once

#include <stdexcept>
#include <string>

namespace happy {

// Malformed input text. Carries the 1-based line (and column, when known).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column = 0)
      : std::runtime_error("line " + std::to_string(line) +
                           (column > 0 ? ":" + std::to_string(column) : "") +
                           ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A structurally well-formed value that violates a semantic invariant
// (e.g. an rmis file whose graph is not regular).
class InvalidInstance : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its stated precondition.
class ContractViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

// An exhaustive oracle would exceed its enumeration budget. Oracles never
// truncate silently; they either finish or throw this.
class BudgetExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized generator ran out of retries.
class GenerationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace happy
