#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltlteach/alphabet.hpp"
#include "ltlteach/formula.hpp"
#include "ltlteach/sample.hpp"

namespace ltlteach {

// Deterministic shortlex enumeration: size first, then the fixed operator
// order; atoms of the alphabet always participate as leaves.
struct EnumerationOrder {
  Alphabet ap;
  Signature ops;
  size_t max_size;
};

std::vector<FormulaPtr> enumerate_formulas(const EnumerationOrder& order);

struct FitOptions {
  // Length cap for the inconclusive enumeration route of schematic_fit.
  size_t schema_enum_len = 8;
  // When positive, schema payloads are judged on their instances up to this
  // length instead of the exact omega-semantics routes.
  size_t schema_instantiate_len = 0;
};

struct FitResult {
  bool ok;
  std::string failure;  // first failing example, printed
};

FitResult fits(const FormulaPtr& f, const Sample& s,
               const FitOptions& opts = {});

struct UniquenessVerdict {
  enum class Status { Confirmed, Refuted, BoundExhausted } status;
  FormulaPtr competitor;  // fitting inequivalent (Refuted) or undecided
  Word witness;           // word on which competitor and target differ
  size_t examined = 0;
};

UniquenessVerdict verify_unique(const FormulaPtr& f, const Sample& s,
                                Signature ops, size_t max_size,
                                const FitOptions& opts = {});

enum class AdversaryFamily { XOr, FAndOmega, Until, XAndNot, FXAndOr };

AdversaryFamily parse_adversary_family(const std::string& name);
const char* adversary_family_name(AdversaryFamily family);

// A fitting competitor inequivalent to the family's designated target,
// plus a payload where they differ (labeled by its truth under the target).
struct AdversaryResult {
  FormulaPtr psi;
  LabeledExample witness;
};

AdversaryResult adversary(AdversaryFamily family, const Sample& s,
                          const FormulaPtr& target);

Sample gold_teach(const FormulaPtr& f, const EnumerationOrder& order);
FormulaPtr gold_learn(const Sample& s, const EnumerationOrder& order);

// Checks truth == "some canonical word anchored-embeds" on every word up to
// max_len; returns the first discrepancy, or nullopt when confirmed.
std::optional<Word> oracle_upward_closure(const FormulaPtr& f,
                                          const Alphabet& ap, size_t max_len);

}  // namespace ltlteach
