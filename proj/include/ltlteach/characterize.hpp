#pragma once

#include <vector>

#include "ltlteach/alphabet.hpp"
#include "ltlteach/formula.hpp"
#include "ltlteach/sample.hpp"
#include "ltlteach/word_expr.hpp"

namespace ltlteach {

// All merged interleavings u |><| v: first letters unioned, tails shuffled
// with optional coincidence-union steps. |result| = Delannoy(|u|-1, |v|-1).
std::vector<Word> merged_interleavings(const Word& u, const Word& v,
                                       const Alphabet& ap);

// Canonical example set E_can(f) for f in the sF,&,|,true,false fragment
// (rewrite F away first). Sorted canonically, deduplicated, memoized.
std::vector<Word> canonical_set(const FormulaPtr& f, const Alphabet& ap);

// Truth over finite words and flat word expressions for formulas rewritable
// into the sF fragment: true iff some canonical word anchored-embeds.
bool eval_monotone(const FormulaPtr& f, const Word& w, const Alphabet& ap);
bool eval_monotone(const FormulaPtr& f, const WordExprPtr& e, const Alphabet& ap);

// The sG-fragment mirror: !eval_monotone(dualize(f), letterwise complement).
bool eval_monotone_G(const FormulaPtr& f, const Word& w, const Alphabet& ap);
bool eval_monotone_G(const FormulaPtr& f, const WordExprPtr& e,
                     const Alphabet& ap);

// (B1...Bt)^w where {Bj} = { AP \ {p1..pk} : pi in firsts[i] }, letters in
// canonical rank order. k = 0 gives (AP)^w. If some firsts[i] is empty the
// exclusion family is empty: returns the Empty expression as a degenerate
// marker (no position can avoid containing the empty letter).
WordExprPtr excl_word(const std::vector<Letter>& firsts, const Alphabet& ap);

// Maximal omega-words avoiding every free embedding of a word in a.
std::vector<WordExprPtr> dual_plus(const std::vector<Word>& a,
                                   const Alphabet& ap);

// Maximal omega-words avoiding every anchored embedding of a word in a.
// Corrected: words whose first letter cannot map to position 0 are dropped
// from the recursive call (anchoring is already impossible). Paper: such
// words are carried unchanged, which loses completeness (e.g. a = {{p}} over
// AP={p} misses u = {}.{p}.{}^w); kept behind the flag for comparison.
enum class DualVariant { Corrected, Paper };
std::vector<WordExprPtr> dual(const std::vector<Word>& a, const Alphabet& ap,
                              DualVariant variant = DualVariant::Corrected);

struct CharacterizeOptions {
  DualVariant dual_variant = DualVariant::Corrected;
  // Drop positives into which another positive anchored-embeds. The dual of
  // the pruned set blocks the same words, so the sample stays sound+complete.
  bool prune_redundant = true;
  size_t budget = 1000000;  // work units for enumeration-based builders
  size_t max_size = 0;      // competitor size bound; 0 = size(f)+3
};

struct CharacterizationReport {
  Sample sample;
  size_t n_pos = 0;
  size_t n_neg = 0;
  size_t l_max = 0;          // longest finite-word payload
  size_t max_expr_size = 0;  // largest word-expression payload
  size_t work = 0;           // loose work counter
};

// Thm-6.1 pipeline: canonical positives + dual negatives, over W^all.
CharacterizationReport characterize_monotone(
    const FormulaPtr& f, const Alphabet& ap,
    const CharacterizeOptions& opts = {});

// sG-fragment mirror: run on the dual, complement letters, swap labels.
CharacterizationReport characterize_monotone_G(
    const FormulaPtr& f, const Alphabet& ap,
    const CharacterizeOptions& opts = {});

// X,&,|,true,false over words of length <= omega: label every word up to
// length n = X-depth + 1, plus w.{}^w / w.(AP)^w for each length-n word.
CharacterizationReport characterize_X_omega(
    const FormulaPtr& f, const Alphabet& ap,
    const CharacterizeOptions& opts = {});

// Finite-word characterization for the six admissible operator sets:
// seeds per construction, then counterexample-guided cleanup against all
// fragment formulas up to the size bound.
CharacterizationReport characterize_finite_fragment(
    const FormulaPtr& f, Signature ops, const Alphabet& ap,
    const CharacterizeOptions& opts = {});

// Monotone characterization re-emitted as schematic examples: finite
// positives as star-free schemas, negative expressions with omega -> star.
CharacterizationReport characterize_schematic(
    const FormulaPtr& f, const Alphabet& ap,
    const CharacterizeOptions& opts = {});

// Finite-word characterizability of LTL_O: admits iff O is a subset of one
// of the six maximal sets; otherwise a non-admitting fragment contained in
// the definability closure of O is returned as the witness.
struct ClassifyResult {
  bool admits;
  Signature witness;
};
ClassifyResult classify_operator_set(Signature ops);

const std::vector<Signature>& positive_maximal_sets();
const std::vector<Signature>& negative_fragments();

struct SizeReport {
  size_t formula_size = 0;
  size_t l_max = 0;
  size_t n_pos = 0;
  size_t n_neg = 0;
  bool length_bound_ok = false;  // l_max <= formula_size
};
SizeReport size_report(const CharacterizationReport& r, const FormulaPtr& f);

}  // namespace ltlteach
