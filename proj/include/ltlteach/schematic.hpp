#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltlteach/alphabet.hpp"
#include "ltlteach/formula.hpp"
#include "ltlteach/word_expr.hpp"

namespace ltlteach {

// Boolean predicates over a single letter.
enum class BOp { True, False, Atom, Not, And, Or };

struct BoolExpr;
using BoolExprPtr = std::shared_ptr<const BoolExpr>;

struct BoolExpr {
  BOp op;
  std::string atom;
  BoolExprPtr lhs, rhs;
};

BoolExprPtr b_true();
BoolExprPtr b_false();
BoolExprPtr b_atom(std::string name);
BoolExprPtr b_not(BoolExprPtr x);
BoolExprPtr b_and(BoolExprPtr a, BoolExprPtr b);
BoolExprPtr b_or(BoolExprPtr a, BoolExprPtr b);

bool beval(const BoolExprPtr& b, Letter s, const Alphabet& ap);
std::string print_bool(const BoolExprPtr& b);
std::vector<Letter> satisfying_letters(const BoolExprPtr& b, const Alphabet& ap);
// The full conjunction pinning down exactly the given letter.
BoolExprPtr exact_letter_pred(Letter s, const Alphabet& ap);

// Union-free regular expressions over letter predicates.
enum class SOp { Sym, Seq, Star };

struct SchematicExpr;
using SchematicExprPtr = std::shared_ptr<const SchematicExpr>;

struct SchematicExpr {
  SOp op;
  BoolExprPtr sym;                          // SOp::Sym
  std::vector<SchematicExprPtr> children;   // SOp::Seq (flattened)
  SchematicExprPtr child;                   // SOp::Star
};

SchematicExprPtr s_sym(BoolExprPtr b);
SchematicExprPtr s_seq(std::vector<SchematicExprPtr> parts);
SchematicExprPtr s_star(SchematicExprPtr child);

size_t star_height(const SchematicExprPtr& r);
bool is_simple(const SchematicExprPtr& r);  // star height <= 1
// Every predicate denotes exactly one letter.
bool is_exact_letter(const SchematicExprPtr& r, const Alphabet& ap);

// omega -> Kleene star; letters become exact-letter predicates.
SchematicExprPtr translate_schematic(const WordExprPtr& e, const Alphabet& ap);
// Inverse direction for exact-letter simple schemas: star -> omega power.
WordExprPtr schema_to_expr(const SchematicExprPtr& r, const Alphabet& ap);

// All stars taken zero times (exact-letter schemas only).
Word min_instance(const SchematicExprPtr& r, const Alphabet& ap);
// All members of L(r) with length <= max_len, canonical order.
std::vector<Word> instances(const SchematicExprPtr& r, const Alphabet& ap,
                            size_t max_len);

enum class FitStatus { Fits, Fails, Unknown };
struct SchematicFit {
  FitStatus status;
  Word witness;  // a counterexample instance when status == Fails
};

SchematicFit schematic_fit(const FormulaPtr& f, const SchematicExprPtr& r,
                           bool positive, const Alphabet& ap,
                           size_t enum_len = 8);

std::string print_schema(const SchematicExprPtr& r);
SchematicExprPtr parse_schema(const std::string& text, const Alphabet& ap);

}  // namespace ltlteach
