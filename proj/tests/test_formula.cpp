#include "doctest.h"

#include "ltlteach/errors.hpp"
#include "ltlteach/formula.hpp"

using namespace ltlteach;

namespace {
const Alphabet AP({"p", "q"});

bool ev(const char* f, const char* w) {
  return eval_finite(parse_formula(f, AP), parse_word(w, AP), AP);
}
}  // namespace

TEST_CASE("parsing round-trips and expands derived operators") {
  CHECK(print_formula(parse_formula("p & X p", AP)) == "p & X p");
  CHECK(print_formula(parse_formula("(p | q) & F p", AP)) == "(p | q) & F p");
  CHECK(print_formula(parse_formula("G p", AP)) == "!F !p");
  CHECK(print_formula(parse_formula("sG p", AP)) == "!sF !p");
  CHECK(parse_formula("true", AP)->op == FOp::True);
  // precedence: unary > U > & > |
  auto f = parse_formula("p U q & q | p", AP);
  CHECK(f->op == FOp::Or);
  CHECK(f->lhs->op == FOp::And);
  CHECK(f->lhs->lhs->op == FOp::Until);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("p &", AP), ParseError);
  CHECK_THROWS_AS(parse_formula("r", AP), ParseError);  // undeclared atom
  CHECK_THROWS_AS(parse_formula("p U q U p", AP), ParseError);  // U chains
  CHECK_THROWS_AS(parse_formula("(p", AP), ParseError);
}

TEST_CASE("finite semantics: X at the last position is false") {
  CHECK_FALSE(ev("X p", "{p}"));
  CHECK(ev("X p", "{}.{p}"));
  CHECK_FALSE(ev("X true", "{p}"));
}

TEST_CASE("finite semantics: F is reflexive, sF is strict") {
  CHECK(ev("F p", "{p}"));
  CHECK_FALSE(ev("sF p", "{p}"));
  CHECK(ev("sF p", "{}.{p}"));
  CHECK(ev("F p", "{}.{}.{p}"));
  CHECK_FALSE(ev("F p", "{}.{q}"));
}

TEST_CASE("finite semantics: U allows an immediate witness") {
  CHECK(ev("p U q", "{q}"));
  CHECK(ev("p U q", "{p}.{p}.{q}"));
  CHECK_FALSE(ev("p U q", "{p}.{p}"));
  CHECK_FALSE(ev("p U q", "{p}.{}.{q}"));
}

TEST_CASE("derived G over finite words") {
  CHECK(ev("G p", "{p}.{p,q}.{p}"));
  CHECK_FALSE(ev("G p", "{p}.{q}"));
  CHECK(ev("sG p", "{q}.{p}.{p}"));  // strictly-later positions only
}

TEST_CASE("eval rejects the empty word") {
  CHECK_THROWS(eval_finite(parse_formula("p", AP), Word{}, AP));
}

TEST_CASE("formula order: size first, then operator rank") {
  auto lt = [](const char* a, const char* b) {
    return formula_cmp(parse_formula(a, AP), parse_formula(b, AP)) < 0;
  };
  CHECK(lt("p", "p & q"));
  CHECK(lt("true", "false"));
  CHECK(lt("false", "p"));
  CHECK(lt("p", "q"));
  CHECK(lt("X p", "sF p"));
  CHECK(lt("sF p", "F p"));
  CHECK(lt("p & q", "p | q"));
  CHECK(lt("p | q", "p U q"));
}

TEST_CASE("signatures") {
  CHECK(signature(parse_formula("p U q", AP)) == SIG_U);
  CHECK(signature(parse_formula("F p & true", AP)) ==
        (SIG_F | SIG_AND | SIG_TOP));
  CHECK(parse_ops("F,sF,&") == (SIG_F | SIG_FS | SIG_AND));
  CHECK(print_signature(SIG_F | SIG_AND) == "{F,&}");
}

TEST_CASE("depth measures") {
  CHECK(x_depth(parse_formula("X X p & X q", AP)) == 2);
  CHECK(temporal_depth(parse_formula("F(p & X q)", AP)) == 2);
}

TEST_CASE("rewriting into the sF fragment preserves finite truth") {
  auto f = parse_formula("F(p & F q)", AP);
  auto r = rewrite_for_fragment(f, RewriteTarget::StrictEventually);
  CHECK(in_sev_fragment(r));
  for (size_t len = 1; len <= 4; ++len)
    for (const Word& w : all_words_of_length(AP, len))
      CHECK(eval_finite(f, w, AP) == eval_finite(r, w, AP));
}

TEST_CASE("fragment recognizers") {
  CHECK(rewritable_to_sev(parse_formula("F p & (q | true)", AP)));
  CHECK_FALSE(rewritable_to_sev(parse_formula("X p", AP)));
  CHECK(in_sglob_fragment(parse_formula("sG p & q", AP)));
  CHECK(rewritable_to_sglob(parse_formula("G(p | q)", AP)));
  CHECK_FALSE(rewritable_to_sglob(parse_formula("F p", AP)));
}

TEST_CASE("bounded equivalence finds shortlex-least witnesses") {
  auto r = equivalent_bounded(parse_formula("F p", AP),
                              parse_formula("p", AP), AP, 4);
  REQUIRE(r.status == EquivalenceResult::Status::Distinguished);
  CHECK(print_word(r.witness, AP) == "{}.{p}");

  // F X p and X F p agree on every finite word: both ask for a witness
  // strictly after the start, except that F X p also tolerates... it does
  // not — they are equivalent, and no bound may claim otherwise.
  auto e = equivalent_bounded(parse_formula("F X p", AP),
                              parse_formula("X F p", AP), AP, 5);
  CHECK(e.status != EquivalenceResult::Status::Distinguished);
}

TEST_CASE("bounded equivalence is exact for depth-bounded fragments") {
  auto e = equivalent_bounded(parse_formula("F p", AP),
                              parse_formula("F(p & true)", AP), AP, 3);
  CHECK(e.status == EquivalenceResult::Status::Equivalent);
  auto x = equivalent_bounded(parse_formula("X X p", AP),
                              parse_formula("X p", AP), AP, 4);
  REQUIRE(x.status == EquivalenceResult::Status::Distinguished);
}
