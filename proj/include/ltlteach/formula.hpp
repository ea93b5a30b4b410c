#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ltlteach/alphabet.hpp"

namespace ltlteach {

enum class FOp {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,
  Eventually,        // F (non-strict)
  StrictEventually,  // F̂ = XF, written sF
  Until
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FOp op;
  std::string atom;        // FOp::Atom only
  FormulaPtr lhs, rhs;     // unary ops use lhs
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_atom(std::string name);
FormulaPtr f_not(FormulaPtr x);
FormulaPtr f_next(FormulaPtr x);
FormulaPtr f_ev(FormulaPtr x);
FormulaPtr f_sev(FormulaPtr x);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_until(FormulaPtr a, FormulaPtr b);

size_t formula_size(const FormulaPtr& f);  // node count
bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

// Shortlex order: size first, then structurally with operator ranks
// true < false < atoms (alphabetical) < ! < X < sF < F < & < | < U.
int formula_cmp(const FormulaPtr& a, const FormulaPtr& b);

// G/sG are expanded at parse time: G x -> !F!x, sG x -> !sF!x.
FormulaPtr parse_formula(const std::string& text, const Alphabet& ap);
std::string print_formula(const FormulaPtr& f);

// Operator-tag signature (nine-element universe; atoms contribute nothing).
using Signature = unsigned;
enum : Signature {
  SIG_U = 1u << 0,
  SIG_F = 1u << 1,
  SIG_FS = 1u << 2,   // F̂
  SIG_X = 1u << 3,
  SIG_AND = 1u << 4,
  SIG_OR = 1u << 5,
  SIG_NOT = 1u << 6,
  SIG_TOP = 1u << 7,
  SIG_BOT = 1u << 8,
};
constexpr Signature SIG_ALL = (1u << 9) - 1;

Signature signature(const FormulaPtr& f);
std::string print_signature(Signature s);            // "{F,&}"
Signature parse_ops(const std::string& commaList);   // "F,&" or "F,sF,true"

bool eval_finite(const FormulaPtr& f, const Word& w, const Alphabet& ap);  // rejects empty words

size_t x_depth(const FormulaPtr& f);         // X-nesting depth
size_t temporal_depth(const FormulaPtr& f);  // nesting depth over U/F/sF/X

enum class RewriteTarget { StrictEventually, StrictGlobally };
FormulaPtr rewrite_for_fragment(const FormulaPtr& f, RewriteTarget target);
FormulaPtr dualize(const FormulaPtr& f);

// Fragment recognizers. The Ĝ fragment is recognized structurally:
// !sF!x counts as a Ĝ node, !F!x as a G node.
bool in_sev_fragment(const FormulaPtr& f);          // sF,&,|,true,false,atoms
bool rewritable_to_sev(const FormulaPtr& f);        // additionally allows F
bool in_sglob_fragment(const FormulaPtr& f);        // Ĝ-patterns,&,|,true,false,atoms
bool rewritable_to_sglob(const FormulaPtr& f);      // additionally allows G patterns

struct EquivalenceResult {
  enum class Status { Equivalent, Distinguished, Unknown } status;
  Word witness;  // shortest shortlex distinguishing word when Distinguished
};

EquivalenceResult equivalent_bounded(const FormulaPtr& a, const FormulaPtr& b,
                                     const Alphabet& ap, size_t max_len);

}  // namespace ltlteach
