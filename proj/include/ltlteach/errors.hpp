#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltlteach {

// Syntax error in one of the textual formats (formulas, words, expressions,
// schemas, sample files). `pos` is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t pos_)
      : std::runtime_error(what + " (at offset " + std::to_string(pos_) + ")"),
        pos(pos_) {}
};

// Operation applied to a formula outside the fragment it supports.
struct FragmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration-based construction exceeded its configured work budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation attempted on an unsupported payload (empty word, non-flat
// expression, undecidable schema, ...).
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ltlteach
