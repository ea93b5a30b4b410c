#include <algorithm>
#include <set>

#include "doctest.h"

#include "ltlteach/characterize.hpp"
#include "ltlteach/embedding.hpp"
#include "ltlteach/errors.hpp"

using namespace ltlteach;

namespace {
const Alphabet PQ({"p", "q"});
const Alphabet P1({"p"});

std::set<std::string> word_prints(const std::vector<Word>& ws,
                                  const Alphabet& ap) {
  std::set<std::string> out;
  for (const Word& w : ws) out.insert(print_word(w, ap));
  return out;
}

std::set<std::string> expr_prints(const std::vector<WordExprPtr>& es,
                                  const Alphabet& ap) {
  std::set<std::string> out;
  for (const auto& e : es) out.insert(print_expr(e, ap));
  return out;
}
}  // namespace

TEST_CASE("merged interleavings: base cases and Delannoy counts") {
  auto single = merged_interleavings(parse_word("{p}", PQ),
                                     parse_word("{q}", PQ), PQ);
  REQUIRE(single.size() == 1);
  CHECK(print_word(single[0], PQ) == "{p,q}");

  auto d11 = merged_interleavings(parse_word("{}.{p}", PQ),
                                  parse_word("{}.{q}", PQ), PQ);
  CHECK(word_prints(d11, PQ) ==
        std::set<std::string>{"{}.{p}.{q}", "{}.{q}.{p}", "{}.{p,q}"});

  auto d22 = merged_interleavings(parse_word("{}.{p}.{p}", PQ),
                                  parse_word("{}.{q}.{q}", PQ), PQ);
  CHECK(d22.size() == 13);

  CHECK_THROWS_AS(merged_interleavings(Word{}, parse_word("{p}", PQ), PQ),
                  EvalError);
}

TEST_CASE("canonical sets of the base constructions") {
  CHECK(canonical_set(parse_formula("false", PQ), PQ).empty());
  CHECK(word_prints(canonical_set(parse_formula("true", PQ), PQ), PQ) ==
        std::set<std::string>{"{}"});
  CHECK(word_prints(canonical_set(parse_formula("sF p", PQ), PQ), PQ) ==
        std::set<std::string>{"{}.{p}"});
  CHECK(word_prints(canonical_set(parse_formula("sF p & sF q", PQ), PQ), PQ) ==
        std::set<std::string>{"{}.{p}.{q}", "{}.{q}.{p}", "{}.{p,q}"});
  CHECK_THROWS_AS(canonical_set(parse_formula("X p", PQ), PQ), FragmentError);
}

TEST_CASE("canonical soundness and minimality at desk scale") {
  // every formula of size <= 4 in the rewritable fragment
  std::vector<FormulaPtr> pool;
  for (const char* s :
       {"p", "q", "true", "sF p", "F p", "p & q", "p | q", "sF(p & q)",
        "F(p | q)", "sF sF p", "F p & q", "sF p | sF q", "F(p & F q)"}) {
    pool.push_back(parse_formula(s, PQ));
  }
  for (const auto& f : pool) {
    auto rew = rewrite_for_fragment(f, RewriteTarget::StrictEventually);
    auto canon = canonical_set(rew, PQ);
    for (const Word& e : canon) CHECK(eval_finite(f, e, PQ));
    for (size_t len = 1; len <= 4; ++len)
      for (const Word& w : all_words_of_length(PQ, len)) {
        bool truth = eval_finite(f, w, PQ);
        bool covered = std::any_of(canon.begin(), canon.end(),
                                   [&](const Word& e) {
                                     return embeds(e, w, true).has_value();
                                   });
        CAPTURE(print_formula(f));
        CAPTURE(print_word(w, PQ));
        CHECK(truth == covered);
      }
  }
}

TEST_CASE("eval_monotone over expressions") {
  CHECK(eval_monotone(parse_formula("sF p", PQ),
                      parse_expr("{q}^w.{p}.{q}^w", PQ), PQ));
  CHECK(eval_monotone(parse_formula("F p", PQ),
                      parse_expr("{}^w.{p}", PQ), PQ));
  CHECK_FALSE(eval_monotone(parse_formula("p & q", PQ),
                            parse_word("{p}.{q}", PQ), PQ));
}

TEST_CASE("eval_monotone_G mirrors through complementation") {
  CHECK(eval_monotone_G(parse_formula("G p", PQ),
                        parse_expr("({p})^w", PQ), PQ));
  CHECK_FALSE(eval_monotone_G(parse_formula("G p", PQ),
                              parse_expr("{p}.({q})^w", PQ), PQ));
  CHECK(eval_monotone_G(parse_formula("sG p", PQ),
                        parse_expr("{q}.({p})^w", PQ), PQ));
}

TEST_CASE("exclusion words") {
  auto both = excl_word({PQ.parse_letter("{p}"), PQ.parse_letter("{q}")}, PQ);
  CHECK(print_expr(both, PQ) == "{}^w");
  auto either = excl_word({PQ.parse_letter("{p,q}")}, PQ);
  CHECK(print_expr(either, PQ) == "({q}.{p})^w");
  auto none = excl_word({}, PQ);
  CHECK(print_expr(none, PQ) == "{p,q}^w");
  auto degenerate = excl_word({PQ.parse_letter("{}")}, PQ);
  CHECK(degenerate->op == WOp::Empty);
}

TEST_CASE("dual_plus matches the hand-executed cases") {
  CHECK(expr_prints(dual_plus({parse_word("{p}", P1)}, P1), P1) ==
        std::set<std::string>{"{}^w"});
  CHECK(expr_prints(dual_plus({}, PQ), PQ) ==
        std::set<std::string>{"{p,q}^w"});
  auto two = dual_plus({parse_word("{p}.{q}", PQ)}, PQ);
  auto prints = expr_prints(two, PQ);
  CHECK(prints.count("{q}^w.{p}.{p}^w"));
  CHECK(prints.count("{q}^w.{p,q}.{p}^w"));
  CHECK(dual_plus({Word{}}, PQ).empty());
}

TEST_CASE("dual_plus blocks exactly the avoiding words") {
  // soundness + completeness against brute force, all A with one word of
  // length <= 3 over {p,q}
  for (size_t len = 1; len <= 3; ++len)
    for (const Word& a : all_words_of_length(PQ, len)) {
      auto vs = dual_plus({a}, PQ);
      for (const auto& v : vs) CHECK_FALSE(embeds(a, v, false));
      for (size_t ul = 1; ul <= 4; ++ul)
        for (const Word& u : all_words_of_length(PQ, ul)) {
          bool avoids = !embeds(a, u, false);
          bool covered = std::any_of(vs.begin(), vs.end(),
                                     [&](const WordExprPtr& v) {
                                       return embeds(u, v, false).has_value();
                                     });
          if (avoids) {
            CAPTURE(print_word(a, PQ));
            CAPTURE(print_word(u, PQ));
            CHECK(covered);
          }
        }
    }
}

TEST_CASE("corrected dual handles the anchored base cases") {
  auto one = dual({parse_word("{p}", P1)}, P1);
  CHECK(expr_prints(one, P1) == std::set<std::string>{"{}.{p}^w"});
  auto prints = expr_prints(dual({parse_word("{}.{p}", P1)}, P1), P1);
  CHECK(prints.count("{p}.{}^w"));
  CHECK(prints.count("{}.{}^w"));
  CHECK(dual({Word{}}, P1).empty());
}

TEST_CASE("duals emit finite maximal avoiders when extension is impossible") {
  // {}.{} embeds into every word of length >= 2, so the avoiders are the
  // single-letter words and {p,q} dominates them all.
  auto d = dual({parse_word("{}.{}", PQ)}, PQ);
  CHECK(expr_prints(d, PQ) == std::set<std::string>{"{p,q}"});
  // Under free embedding only the empty word avoids {}, and that is no model.
  CHECK(dual_plus({parse_word("{}", PQ)}, PQ).empty());
}

TEST_CASE("paper dual variant loses completeness on the documented case") {
  Word a = parse_word("{p}", P1);
  Word u = parse_word("{}.{p}", P1);
  REQUIRE_FALSE(embeds(a, u, true));  // u avoids a (anchored)
  auto paper = dual({a}, P1, DualVariant::Paper);
  bool covered = std::any_of(paper.begin(), paper.end(),
                             [&](const WordExprPtr& v) {
                               return embeds(u, v, true).has_value();
                             });
  CHECK_FALSE(covered);
  auto corrected = dual({a}, P1, DualVariant::Corrected);
  bool fixed = std::any_of(corrected.begin(), corrected.end(),
                           [&](const WordExprPtr& v) {
                             return embeds(u, v, true).has_value();
                           });
  CHECK(fixed);
}

TEST_CASE("characterize_monotone on small formulas") {
  auto bot = characterize_monotone(parse_formula("false", PQ), PQ);
  CHECK(bot.n_pos == 0);
  CHECK(bot.n_neg == 1);

  auto p = characterize_monotone(parse_formula("p", PQ), PQ);
  CHECK(p.n_pos == 1);
  bool has = false;
  for (const auto& ex : p.sample.examples)
    if (!ex.positive && print_expr(ex.expr, PQ) == "{}.{p,q}^w") has = true;
  // the negative family must contain a maximal word starting below {p}
  CHECK(has);
  for (const auto& ex : p.sample.examples) {
    if (ex.positive)
      CHECK(eval_finite(parse_formula("p", PQ), ex.word, PQ));
    else
      CHECK_FALSE(eval_monotone(parse_formula("p", PQ), ex.expr, PQ));
  }
}

TEST_CASE("characterize_monotone_G swaps roles through the dual") {
  auto r = characterize_monotone_G(parse_formula("G p", PQ), PQ);
  auto g = parse_formula("G p", PQ);
  for (const auto& ex : r.sample.examples) {
    if (ex.kind == ExampleKind::FiniteWord)
      CHECK(eval_finite(g, ex.word, PQ) == ex.positive);
    else
      CHECK(eval_monotone_G(g, ex.expr, PQ) == ex.positive);
  }
  CHECK(r.n_pos >= 1);
  CHECK(r.n_neg >= 1);
}

TEST_CASE("characterize_X_omega labels prefixes and omega paddings") {
  auto f = parse_formula("X p", PQ);
  auto r = characterize_X_omega(f, PQ, {});
  CHECK(r.n_pos + r.n_neg > 0);
  for (const auto& ex : r.sample.examples) {
    if (ex.kind == ExampleKind::FiniteWord) {
      CHECK(eval_finite(f, ex.word, PQ) == ex.positive);
    } else {
      // truth over w.B^w is decided by the first x_depth+1 letters
      Word prefix = materialize_prefix(ex.expr, x_depth(f) + 1);
      CHECK(eval_finite(f, prefix, PQ) == ex.positive);
    }
  }
  CHECK_THROWS_AS(characterize_X_omega(parse_formula("F p", PQ), PQ, {}),
                  FragmentError);
}

TEST_CASE("classification anchors") {
  CHECK(classify_operator_set(parse_ops("sF,X,&,true")).admits);
  CHECK(classify_operator_set(parse_ops("F,|,true,false")).admits);
  auto fa = classify_operator_set(parse_ops("F,&"));
  CHECK_FALSE(fa.admits);
  CHECK(fa.witness == parse_ops("F,&"));
  auto u = classify_operator_set(parse_ops("U"));
  CHECK_FALSE(u.admits);
  CHECK(u.witness == parse_ops("U"));
  CHECK_THROWS_AS(classify_operator_set(parse_ops("&,|")), FragmentError);
}

TEST_CASE("size report") {
  auto f = parse_formula("sF p & sF q", PQ);
  auto r = characterize_monotone(f, PQ);
  auto sr = size_report(r, f);
  CHECK(sr.l_max == 3);
  CHECK(sr.formula_size == 5);
  CHECK(sr.length_bound_ok);
}

TEST_CASE("characterize_schematic emits fitting simple schemas") {
  auto f = parse_formula("F(p & q)", PQ);
  auto r = characterize_schematic(f, PQ);
  CHECK(r.n_pos >= 1);
  CHECK(r.n_neg >= 1);
  for (const auto& ex : r.sample.examples) {
    REQUIRE(ex.kind == ExampleKind::Schema);
    CHECK(is_simple(ex.schema));
    CHECK(schematic_fit(f, ex.schema, ex.positive, PQ).status ==
          FitStatus::Fits);
  }
}
