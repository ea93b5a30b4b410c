#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ltlteach/alphabet.hpp"
#include "ltlteach/ordinal.hpp"

namespace ltlteach {

// Finitely presented transfinite words: Lit | Concat | OmegaPower.
// The Empty node only arises from degenerate exclusion families (it denotes
// the empty word) and is normalized away inside concatenations.
enum class WOp { Lit, Concat, Omega, Empty };

struct WordExpr;
using WordExprPtr = std::shared_ptr<const WordExpr>;

struct WordExpr {
  WOp op;
  Letter lit = 0;            // WOp::Lit
  WordExprPtr lhs, rhs;      // WOp::Concat (right-nested)
  WordExprPtr child;         // WOp::Omega
};

WordExprPtr w_lit(Letter s);
WordExprPtr w_empty();
WordExprPtr w_concat(WordExprPtr a, WordExprPtr b);  // right-nests, drops Empty
WordExprPtr w_omega(WordExprPtr child);
WordExprPtr word_to_expr(const Word& w);  // empty word -> Empty node

bool same_expr(const WordExprPtr& a, const WordExprPtr& b);
size_t expr_size(const WordExprPtr& e);  // node count
bool is_flat(const WordExprPtr& e);      // no nested omega powers
bool has_omega(const WordExprPtr& e);

Ordinal expr_length(const WordExprPtr& e);
WordExprPtr complement_word(const WordExprPtr& e, const Alphabet& ap);

// Every omega power replaced by k copies of its body (flat expressions only).
Word unfold(const WordExprPtr& e, size_t k);

std::string print_expr(const WordExprPtr& e, const Alphabet& ap);
WordExprPtr parse_expr(const std::string& text, const Alphabet& ap);

// Flattened view of a flat expression: a sequence of segments, each a finite
// block of letters repeated once or omega-many times.
struct Segment {
  Word period;
  bool omega;
};
std::vector<Segment> flatten(const WordExprPtr& e);  // throws on nesting

// First `len` letters of the denoted word (requires length >= len).
Word materialize_prefix(const WordExprPtr& e, size_t len);

}  // namespace ltlteach
