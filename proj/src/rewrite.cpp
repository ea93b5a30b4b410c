#include <algorithm>

#include "ltlteach/errors.hpp"
#include "ltlteach/formula.hpp"

namespace ltlteach {

// Structural view of the monotone fragments: !F!x reads as G x, !sF!x as Ĝ x.
namespace {

enum class MKind { Top, Bot, Atom, And, Or, SEv, Ev, SGlob, Glob, Other };

MKind mview(const FormulaPtr& f, FormulaPtr* a = nullptr) {
  switch (f->op) {
    case FOp::True: return MKind::Top;
    case FOp::False: return MKind::Bot;
    case FOp::Atom: return MKind::Atom;
    case FOp::And: return MKind::And;
    case FOp::Or: return MKind::Or;
    case FOp::StrictEventually:
      if (a) *a = f->lhs;
      return MKind::SEv;
    case FOp::Eventually:
      if (a) *a = f->lhs;
      return MKind::Ev;
    case FOp::Not: {
      const FormulaPtr& inner = f->lhs;
      if ((inner->op == FOp::Eventually ||
           inner->op == FOp::StrictEventually) &&
          inner->lhs->op == FOp::Not) {
        if (a) *a = inner->lhs->lhs;
        return inner->op == FOp::Eventually ? MKind::Glob : MKind::SGlob;
      }
      return MKind::Other;
    }
    default: return MKind::Other;
  }
}

bool check_fragment(const FormulaPtr& f, bool allow_sev, bool allow_ev,
                    bool allow_sglob, bool allow_glob) {
  FormulaPtr a;
  switch (mview(f, &a)) {
    case MKind::Top:
    case MKind::Bot:
    case MKind::Atom: return true;
    case MKind::And:
    case MKind::Or:
      return check_fragment(f->lhs, allow_sev, allow_ev, allow_sglob,
                            allow_glob) &&
             check_fragment(f->rhs, allow_sev, allow_ev, allow_sglob,
                            allow_glob);
    case MKind::SEv:
      return allow_sev &&
             check_fragment(a, allow_sev, allow_ev, allow_sglob, allow_glob);
    case MKind::Ev:
      return allow_ev &&
             check_fragment(a, allow_sev, allow_ev, allow_sglob, allow_glob);
    case MKind::SGlob:
      return allow_sglob &&
             check_fragment(a, allow_sev, allow_ev, allow_sglob, allow_glob);
    case MKind::Glob:
      return allow_glob &&
             check_fragment(a, allow_sev, allow_ev, allow_sglob, allow_glob);
    case MKind::Other: return false;
  }
  return false;
}

}  // namespace

bool in_sev_fragment(const FormulaPtr& f) {
  return check_fragment(f, true, false, false, false);
}
bool rewritable_to_sev(const FormulaPtr& f) {
  return check_fragment(f, true, true, false, false);
}
bool in_sglob_fragment(const FormulaPtr& f) {
  return check_fragment(f, false, false, true, false);
}
bool rewritable_to_sglob(const FormulaPtr& f) {
  return check_fragment(f, false, false, true, true);
}

FormulaPtr rewrite_for_fragment(const FormulaPtr& f, RewriteTarget target) {
  FormulaPtr a;
  MKind k = mview(f, &a);
  bool sev_side = target == RewriteTarget::StrictEventually;
  switch (k) {
    case MKind::Top:
    case MKind::Bot:
    case MKind::Atom: return f;
    case MKind::And:
      return f_and(rewrite_for_fragment(f->lhs, target),
                   rewrite_for_fragment(f->rhs, target));
    case MKind::Or:
      return f_or(rewrite_for_fragment(f->lhs, target),
                  rewrite_for_fragment(f->rhs, target));
    case MKind::SEv:
      if (sev_side) return f_sev(rewrite_for_fragment(a, target));
      break;
    case MKind::Ev: {
      // F x is definable as x | sF x.
      if (sev_side) {
        FormulaPtr r = rewrite_for_fragment(a, target);
        return f_or(r, f_sev(r));
      }
      break;
    }
    case MKind::SGlob:
      if (!sev_side) {
        FormulaPtr r = rewrite_for_fragment(a, target);
        return f_not(f_sev(f_not(r)));
      }
      break;
    case MKind::Glob: {
      // G x is definable as x & sG x.
      if (!sev_side) {
        FormulaPtr r = rewrite_for_fragment(a, target);
        return f_and(r, f_not(f_sev(f_not(r))));
      }
      break;
    }
    case MKind::Other: break;
  }
  throw FragmentError("formula outside the rewritable fragment at subterm: " +
                      print_formula(f));
}

FormulaPtr dualize(const FormulaPtr& f) {
  FormulaPtr a;
  switch (mview(f, &a)) {
    case MKind::Top: return f_false();
    case MKind::Bot: return f_true();
    case MKind::Atom: return f;
    case MKind::And: return f_or(dualize(f->lhs), dualize(f->rhs));
    case MKind::Or: return f_and(dualize(f->lhs), dualize(f->rhs));
    case MKind::SGlob: return f_sev(dualize(a));
    case MKind::SEv: return f_not(f_sev(f_not(dualize(a))));
    default:
      throw FragmentError("dualize: formula outside the Ĝ/F̂ fragment: " +
                          print_formula(f));
  }
}

EquivalenceResult equivalent_bounded(const FormulaPtr& a, const FormulaPtr& b,
                                     const Alphabet& ap, size_t max_len) {
  for (size_t len = 1; len <= max_len; ++len) {
    for (const Word& w : all_words_of_length(ap, len)) {
      if (eval_finite(a, w, ap) != eval_finite(b, w, ap))
        return {EquivalenceResult::Status::Distinguished, w};
    }
  }
  Signature sa = signature(a), sb = signature(b);
  // Exactness route 1: no U/X/sF on either side and temporal depth < max_len
  // (per the finite-word sufficiency argument of Thm 2.3).
  if (((sa | sb) & (SIG_U | SIG_X | SIG_FS)) == 0 &&
      temporal_depth(a) < max_len && temporal_depth(b) < max_len)
    return {EquivalenceResult::Status::Equivalent, {}};
  // Exactness route 2: X-fragment formulas; truth depends only on a bounded
  // prefix, so agreement on all words up to nesting depth + 1 is conclusive.
  constexpr Signature x_frag = SIG_X | SIG_AND | SIG_OR | SIG_NOT | SIG_TOP | SIG_BOT;
  if ((sa & ~x_frag) == 0 && (sb & ~x_frag) == 0 && x_depth(a) < max_len &&
      x_depth(b) < max_len)
    return {EquivalenceResult::Status::Equivalent, {}};
  return {EquivalenceResult::Status::Unknown, {}};
}

}  // namespace ltlteach
