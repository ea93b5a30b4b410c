#include "ltlteach/verification.hpp"

#include <algorithm>

#include "ltlteach/characterize.hpp"
#include "ltlteach/embedding.hpp"
#include "ltlteach/errors.hpp"
#include "ltlteach/schematic.hpp"
#include "ltlteach/word_expr.hpp"

namespace ltlteach {

std::vector<FormulaPtr> enumerate_formulas(const EnumerationOrder& order) {
  std::vector<std::vector<FormulaPtr>> by_size(order.max_size + 1);
  if (order.max_size >= 1) {
    auto& leaves = by_size[1];
    if (order.ops & SIG_TOP) leaves.push_back(f_true());
    if (order.ops & SIG_BOT) leaves.push_back(f_false());
    for (const auto& a : order.ap.atoms) leaves.push_back(f_atom(a));
  }
  for (size_t s = 2; s <= order.max_size; ++s) {
    auto& bucket = by_size[s];
    for (const FormulaPtr& c : by_size[s - 1]) {
      if (order.ops & SIG_NOT) bucket.push_back(f_not(c));
      if (order.ops & SIG_X) bucket.push_back(f_next(c));
      if (order.ops & SIG_FS) bucket.push_back(f_sev(c));
      if (order.ops & SIG_F) bucket.push_back(f_ev(c));
    }
    for (size_t a = 1; a + 2 <= s; ++a) {
      size_t b = s - 1 - a;
      for (const FormulaPtr& l : by_size[a])
        for (const FormulaPtr& r : by_size[b]) {
          if (order.ops & SIG_AND) bucket.push_back(f_and(l, r));
          if (order.ops & SIG_OR) bucket.push_back(f_or(l, r));
          if (order.ops & SIG_U) bucket.push_back(f_until(l, r));
        }
    }
    std::sort(bucket.begin(), bucket.end(),
              [](const FormulaPtr& x, const FormulaPtr& y) {
                return formula_cmp(x, y) < 0;
              });
  }
  std::vector<FormulaPtr> out;
  for (auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

static constexpr Signature kXFragment =
    SIG_X | SIG_AND | SIG_OR | SIG_NOT | SIG_TOP | SIG_BOT;

static bool eval_expr_payload(const FormulaPtr& f, const WordExprPtr& e,
                              const Alphabet& ap) {
  if (rewritable_to_sev(f)) return eval_monotone(f, e, ap);
  if (rewritable_to_sglob(f)) return eval_monotone_G(f, e, ap);
  if (!(signature(f) & ~kXFragment)) {
    // Truth of an X-formula depends only on the first X-depth+1 positions.
    if (!has_omega(e)) {
      Word w = unfold(e, 1);
      if (w.empty())
        throw EvalError("cannot evaluate a formula on the empty word");
      return eval_finite(f, w, ap);
    }
    return eval_finite(f, materialize_prefix(e, x_depth(f) + 1), ap);
  }
  throw EvalError("cannot evaluate " + print_formula(f) +
                  " on an omega-expression payload");
}

FitResult fits(const FormulaPtr& f, const Sample& s, const FitOptions& opts) {
  for (const LabeledExample& ex : s.examples) {
    bool good;
    switch (ex.kind) {
      case ExampleKind::FiniteWord:
        good = eval_finite(f, ex.word, s.ap) == ex.positive;
        break;
      case ExampleKind::Expr:
        good = eval_expr_payload(f, ex.expr, s.ap) == ex.positive;
        break;
      case ExampleKind::Schema: {
        if (opts.schema_instantiate_len > 0) {
          good = true;
          for (const Word& u :
               instances(ex.schema, s.ap, opts.schema_instantiate_len))
            if (eval_finite(f, u, s.ap) != ex.positive) {
              good = false;
              break;
            }
        } else {
          SchematicFit sf = schematic_fit(f, ex.schema, ex.positive, s.ap,
                                          opts.schema_enum_len);
          if (sf.status == FitStatus::Unknown)
            throw EvalError("schematic fit undecided for " + print_formula(f) +
                            " on " + print_schema(ex.schema));
          good = sf.status == FitStatus::Fits;
        }
        break;
      }
    }
    if (!good) return {false, print_example(ex, s.ap)};
  }
  return {true, ""};
}

namespace {

struct EquivOutcome {
  enum class Kind { Equivalent, Distinguished, Unknown } kind;
  Word witness;
};

EquivOutcome decide_equivalence(const FormulaPtr& a, const FormulaPtr& b,
                                const Alphabet& ap, size_t fallback_len) {
  if (rewritable_to_sev(a) && rewritable_to_sev(b)) {
    // Mutual canonical domination is exact over all ordinal words.
    FormulaPtr ra = rewrite_for_fragment(a, RewriteTarget::StrictEventually);
    FormulaPtr rb = rewrite_for_fragment(b, RewriteTarget::StrictEventually);
    for (const Word& e : canonical_set(rb, ap))
      if (!eval_monotone(a, e, ap))
        return {EquivOutcome::Kind::Distinguished, e};
    for (const Word& e : canonical_set(ra, ap))
      if (!eval_monotone(b, e, ap))
        return {EquivOutcome::Kind::Distinguished, e};
    return {EquivOutcome::Kind::Equivalent, {}};
  }
  Signature combined = signature(a) | signature(b);
  if (!(combined & ~kXFragment)) {
    // Exact: truth is decided by the first X-depth+1 letters.
    size_t depth = std::max(x_depth(a), x_depth(b));
    for (size_t l = 1; l <= depth + 1; ++l)
      for (const Word& w : all_words_of_length(ap, l))
        if (eval_finite(a, w, ap) != eval_finite(b, w, ap))
          return {EquivOutcome::Kind::Distinguished, w};
    return {EquivOutcome::Kind::Equivalent, {}};
  }
  EquivalenceResult r = equivalent_bounded(a, b, ap, fallback_len);
  switch (r.status) {
    case EquivalenceResult::Status::Equivalent:
      return {EquivOutcome::Kind::Equivalent, {}};
    case EquivalenceResult::Status::Distinguished:
      return {EquivOutcome::Kind::Distinguished, r.witness};
    default:
      return {EquivOutcome::Kind::Unknown, {}};
  }
}

}  // namespace

UniquenessVerdict verify_unique(const FormulaPtr& f, const Sample& s,
                                Signature ops, size_t max_size,
                                const FitOptions& opts) {
  FitResult base = fits(f, s, opts);
  if (!base.ok)
    throw EvalError("target formula does not fit the sample at " +
                    base.failure);
  UniquenessVerdict v{UniquenessVerdict::Status::Confirmed, nullptr, {}, 0};
  for (const FormulaPtr& psi : enumerate_formulas({s.ap, ops, max_size})) {
    ++v.examined;
    if (!fits(psi, s, opts).ok) continue;
    size_t fallback = 2 * (formula_size(f) + formula_size(psi));
    EquivOutcome eq = decide_equivalence(f, psi, s.ap, fallback);
    if (eq.kind == EquivOutcome::Kind::Equivalent) continue;
    v.competitor = psi;
    if (eq.kind == EquivOutcome::Kind::Distinguished) {
      if (eval_finite(f, eq.witness, s.ap) ==
          eval_finite(psi, eq.witness, s.ap))
        throw EvalError("internal: disagreement witness does not distinguish " +
                        print_formula(f) + " from " + print_formula(psi));
      v.status = UniquenessVerdict::Status::Refuted;
      v.witness = eq.witness;
    } else {
      v.status = UniquenessVerdict::Status::BoundExhausted;
    }
    return v;
  }
  return v;
}

// ---- adversaries -----------------------------------------------------------

AdversaryFamily parse_adversary_family(const std::string& name) {
  if (name == "x-or") return AdversaryFamily::XOr;
  if (name == "f-and-omega") return AdversaryFamily::FAndOmega;
  if (name == "until") return AdversaryFamily::Until;
  if (name == "x-and-not") return AdversaryFamily::XAndNot;
  if (name == "fx-and-or") return AdversaryFamily::FXAndOr;
  throw ParseError("unknown adversary family '" + name + "'", 0);
}

const char* adversary_family_name(AdversaryFamily family) {
  switch (family) {
    case AdversaryFamily::XOr: return "x-or";
    case AdversaryFamily::FAndOmega: return "f-and-omega";
    case AdversaryFamily::Until: return "until";
    case AdversaryFamily::XAndNot: return "x-and-not";
    case AdversaryFamily::FXAndOr: return "fx-and-or";
  }
  return "";
}

static FormulaPtr designated_target(AdversaryFamily family) {
  switch (family) {
    case AdversaryFamily::XOr:
    case AdversaryFamily::XAndNot:
      return f_atom("p");
    case AdversaryFamily::Until:
      return f_until(f_until(f_atom("p"), f_atom("q")), f_atom("r"));
    case AdversaryFamily::FAndOmega:
      return f_ev(f_and(
          f_and(f_atom("p"), f_atom("q")),
          f_ev(f_and(f_atom("r"), f_ev(f_and(f_atom("p"), f_atom("q")))))));
    case AdversaryFamily::FXAndOr:
      return f_ev(f_and(f_atom("p"), f_atom("q")));
  }
  return nullptr;
}

static Letter atom_bit(const Alphabet& ap, const std::string& name) {
  auto idx = ap.index_of(name);
  if (!idx)
    throw EvalError("adversary family needs atom '" + name +
                    "' in the alphabet");
  return Letter(1u << *idx);
}

static FormulaPtr x_power(FormulaPtr f, size_t n) {
  for (size_t i = 0; i < n; ++i) f = f_next(std::move(f));
  return f;
}

// k nested alternations of p and q in front of F(r & F(p&q)).
static FormulaPtr alternation_formula(size_t k) {
  FormulaPtr psi = f_ev(f_and(f_atom("r"), f_ev(f_and(f_atom("p"),
                                                      f_atom("q")))));
  for (size_t j = k; j > 0; --j) {
    FormulaPtr a = (j % 2 == 1) ? f_atom("p") : f_atom("q");
    psi = f_ev(f_and(a, psi));
  }
  return psi;
}

AdversaryResult adversary(AdversaryFamily family, const Sample& s,
                          const FormulaPtr& target) {
  if (!same_formula(target, designated_target(family)))
    throw EvalError(std::string("family '") + adversary_family_name(family) +
                    "' expects target " +
                    print_formula(designated_target(family)));
  const Alphabet& ap = s.ap;
  bool omega_ok = family == AdversaryFamily::FAndOmega;
  for (const LabeledExample& ex : s.examples) {
    if (ex.kind == ExampleKind::Schema)
      throw EvalError("adversary samples cannot contain schema payloads");
    if (ex.kind == ExampleKind::Expr) {
      if (!omega_ok)
        throw EvalError("this adversary family accepts finite words only");
      // Words of length at most omega: one trailing omega block.
      auto segs = flatten(ex.expr);
      for (size_t i = 0; i < segs.size(); ++i)
        if (segs[i].omega && i + 1 != segs.size())
          throw EvalError("adversary payloads must have length at most omega");
    }
  }
  if (!fits(target, s).ok)
    throw EvalError("target does not fit the supplied sample");

  FormulaPtr psi;
  LabeledExample witness;
  switch (family) {
    case AdversaryFamily::XOr: {
      Letter p = atom_bit(ap, "p");
      size_t lmax = 0;
      for (const LabeledExample& ex : s.examples)
        lmax = std::max(lmax, ex.word.size());
      size_t n = lmax + 1;
      psi = f_or(f_atom("p"), x_power(f_atom("p"), n));
      Word w(n, 0);
      w.push_back(p);
      witness = {ExampleKind::FiniteWord, false, w, nullptr, nullptr};
      break;
    }
    case AdversaryFamily::XAndNot: {
      Letter p = atom_bit(ap, "p");
      std::vector<Word> negs;
      for (const LabeledExample& ex : s.examples)
        if (!ex.positive) negs.push_back(ex.word);
      FormulaPtr conj;
      Word w{0};  // the distinguishing word starts with the empty letter
      for (size_t i = 0; i < negs.size(); ++i) {
        bool has_p =
            i + 1 < negs[i].size() && subset(p, negs[i][i + 1]);
        FormulaPtr c = x_power(has_p ? f_not(f_atom("p")) : f_atom("p"), i + 1);
        conj = conj ? f_and(conj, c) : c;
        Letter at = i + 1 < negs[i].size() ? negs[i][i + 1] : Letter(0);
        w.push_back(ap.complement(at));
      }
      // With no negatives the side condition is vacuous (p | !p).
      psi = f_or(f_atom("p"), conj ? conj : f_not(f_atom("p")));
      witness = {ExampleKind::FiniteWord, false, w, nullptr, nullptr};
      break;
    }
    case AdversaryFamily::FXAndOr: {
      Letter p = atom_bit(ap, "p");
      Letter q = atom_bit(ap, "q");
      size_t lmax = 0;
      for (const LabeledExample& ex : s.examples)
        lmax = std::max(lmax, ex.word.size());
      size_t n = lmax + 1;
      FormulaPtr conj = f_atom("p");
      for (size_t i = 1; i <= n; ++i)
        conj = f_and(conj, x_power(f_atom("p"), i));
      conj = f_and(conj, x_power(f_atom("q"), n + 1));
      psi = f_or(target, conj);
      Word w(n + 1, p);
      w.push_back(q);
      witness = {ExampleKind::FiniteWord, false, w, nullptr, nullptr};
      break;
    }
    case AdversaryFamily::Until: {
      Letter p = atom_bit(ap, "p");
      Letter q = atom_bit(ap, "q");
      Letter rr = atom_bit(ap, "r");
      size_t m = 0;
      for (const LabeledExample& ex : s.examples) {
        if (!ex.positive) continue;
        size_t alt = 0;
        int last = -1;  // 0 = p-position, 1 = q-position
        for (Letter sig : ex.word) {
          if (subset(rr, sig)) break;
          int cur = subset(p, sig) ? 0 : subset(q, sig) ? 1 : -1;
          if (cur < 0) continue;
          if (last >= 0 && cur != last) ++alt;
          last = cur;
        }
        m = std::max(m, alt);
      }
      // Preferred depth is m+1: one more alternation than any positive
      // example uses before its r-witness. That can still clash with a
      // negative example whose r makes the nested until true, so fall back
      // to smaller depths (down to psi_0 = r) when necessary; every depth
      // keeps the same distinguishing word below.
      std::vector<size_t> depths;
      for (size_t d = m + 1; d <= m + 16; ++d) depths.push_back(d);
      for (size_t d = m + 1; d-- > 0;) depths.push_back(d);
      size_t n = 0;
      bool found = false;
      for (size_t d : depths) {
        psi = f_atom("r");
        for (size_t i = 0; i < d; ++i)
          psi = f_until(f_atom("p"), f_until(f_atom("q"), psi));
        if (fits(psi, s).ok) {
          n = d;
          found = true;
          break;
        }
      }
      if (!found)
        throw EvalError(
            "sample outside the until family's proof domain: no alternation "
            "depth yields a fitting formula");
      Word w;
      for (size_t i = 0; i <= n; ++i) {
        w.push_back(p);
        w.push_back(q);
      }
      w.push_back(rr);
      witness = {ExampleKind::FiniteWord, true, w, nullptr, nullptr};
      break;
    }
    case AdversaryFamily::FAndOmega: {
      Letter p = atom_bit(ap, "p");
      Letter q = atom_bit(ap, "q");
      Letter rr = atom_bit(ap, "r");
      Letter pq = Letter(p | q);
      auto last_of = [&](const Word& w, auto pred) {
        int last = -1;
        for (size_t i = 0; i < w.size(); ++i)
          if (pred(w[i])) last = int(i);
        return last;
      };
      auto is_pq = [&](Letter sig) { return subset(pq, sig); };
      auto is_r = [&](Letter sig) { return subset(rr, sig); };
      size_t lmax = 0;
      for (const LabeledExample& ex : s.examples) {
        if (ex.positive) continue;
        Word prefix;
        Word period;
        if (ex.kind == ExampleKind::FiniteWord) {
          prefix = ex.word;
        } else {
          for (const Segment& seg : flatten(ex.expr)) {
            if (seg.omega)
              period = seg.period;
            else
              prefix.insert(prefix.end(), seg.period.begin(),
                            seg.period.end());
          }
        }
        bool per_pq = std::any_of(period.begin(), period.end(), is_pq);
        bool per_r = std::any_of(period.begin(), period.end(), is_r);
        if (per_pq && per_r)
          throw EvalError("internal: negative example satisfies the target");
        size_t l;
        if (per_pq)
          l = size_t(last_of(prefix, is_r) + 1);
        else if (per_r)
          l = size_t(last_of(prefix, is_pq) + 1);
        else
          l = size_t(std::min(last_of(prefix, is_pq),
                              last_of(prefix, is_r)) + 1);
        lmax = std::max(lmax, l);
      }
      size_t k = lmax + 1;
      for (;; ++k) {
        psi = alternation_formula(k);
        if (fits(psi, s).ok) break;
        if (k > lmax + 16)
          throw EvalError("internal: no fitting alternation bound found");
      }
      // ({p}.{q})^(k).{r}.{p,q}.{}^w satisfies psi but not the target.
      WordExprPtr e = w_empty();
      e = w_concat(e, w_omega(w_lit(0)));
      e = w_concat(w_lit(pq), e);
      e = w_concat(w_lit(rr), e);
      for (size_t i = 0; i < k; ++i)
        e = w_concat(w_lit(p), w_concat(w_lit(q), e));
      witness = {ExampleKind::Expr, false, {}, e, nullptr};
      break;
    }
  }

  // Contract: psi fits the sample and the witness separates psi from the
  // target (witness label = truth under the target).
  if (!fits(psi, s).ok)
    throw EvalError("internal: adversary formula does not fit the sample");
  bool t_val, p_val;
  if (witness.kind == ExampleKind::FiniteWord) {
    t_val = eval_finite(target, witness.word, ap);
    p_val = eval_finite(psi, witness.word, ap);
  } else {
    t_val = eval_monotone(target, witness.expr, ap);
    p_val = eval_monotone(psi, witness.expr, ap);
  }
  if (t_val == p_val)
    throw EvalError("internal: adversary witness does not distinguish");
  witness.positive = t_val;
  return {psi, witness};
}

// ---- Gold-style teacher and learner ---------------------------------------

Sample gold_teach(const FormulaPtr& f, const EnumerationOrder& order) {
  std::vector<FormulaPtr> all = enumerate_formulas(order);
  size_t j = all.size();
  for (size_t i = 0; i < all.size(); ++i)
    if (same_formula(all[i], f)) {
      j = i;
      break;
    }
  if (j == all.size())
    throw BudgetError("formula " + print_formula(f) +
                      " is beyond the enumeration bound");
  Sample s;
  s.ap = order.ap;
  for (size_t i = 0; i < j; ++i) {
    size_t fallback = 2 * (formula_size(f) + formula_size(all[i]));
    EquivOutcome eq = decide_equivalence(f, all[i], order.ap, fallback);
    if (eq.kind == EquivOutcome::Kind::Equivalent) continue;
    if (eq.kind == EquivOutcome::Kind::Unknown)
      throw BudgetError("witness search exhausted distinguishing " +
                        print_formula(f) + " from " + print_formula(all[i]));
    s.add_word(eval_finite(f, eq.witness, order.ap), eq.witness);
  }
  return s;
}

FormulaPtr gold_learn(const Sample& s, const EnumerationOrder& order) {
  for (const FormulaPtr& psi : enumerate_formulas(order))
    if (fits(psi, s).ok) return psi;
  throw BudgetError("no formula within the enumeration bound fits the sample");
}

std::optional<Word> oracle_upward_closure(const FormulaPtr& f,
                                          const Alphabet& ap, size_t max_len) {
  FormulaPtr rew = rewrite_for_fragment(f, RewriteTarget::StrictEventually);
  const std::vector<Word> canon = canonical_set(rew, ap);
  for (size_t l = 1; l <= max_len; ++l)
    for (const Word& w : all_words_of_length(ap, l)) {
      bool sat = eval_finite(f, w, ap);
      bool emb = false;
      for (const Word& e : canon)
        if (embeds(e, w, true)) {
          emb = true;
          break;
        }
      if (sat != emb) return w;
    }
  return std::nullopt;
}

}  // namespace ltlteach
