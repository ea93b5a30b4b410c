#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ltlteach/alphabet.hpp"
#include "ltlteach/schematic.hpp"
#include "ltlteach/word_expr.hpp"

namespace ltlteach {

enum class ExampleKind { FiniteWord, Expr, Schema };

struct LabeledExample {
  ExampleKind kind;
  bool positive;
  Word word;             // ExampleKind::FiniteWord
  WordExprPtr expr;      // ExampleKind::Expr
  SchematicExprPtr schema;  // ExampleKind::Schema
};

struct Sample {
  Alphabet ap;
  std::vector<LabeledExample> examples;

  void add_word(bool positive, Word w);
  void add_expr(bool positive, WordExprPtr e);
  void add_schema(bool positive, SchematicExprPtr r);

  size_t count(bool positive) const;
};

std::string print_example(const LabeledExample& ex, const Alphabet& ap);
std::string print_sample(const Sample& s);

// Line format: "ap: p q r" header, then one example per line,
// "+|- word|expr|schema <payload>". '#' starts a comment.
Sample parse_sample(const std::string& text);
Sample load_sample(const std::string& path);
void save_sample(const Sample& s, const std::string& path);

}  // namespace ltlteach
