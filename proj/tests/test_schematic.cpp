#include "doctest.h"

#include "ltlteach/errors.hpp"
#include "ltlteach/schematic.hpp"

using namespace ltlteach;

namespace {
const Alphabet AP({"p", "q"});
}

TEST_CASE("letter predicates: evaluation and printing") {
  auto b = parse_schema("[p&!q]", AP);
  REQUIRE(b->op == SOp::Sym);
  CHECK(beval(b->sym, AP.parse_letter("{p}"), AP));
  CHECK_FALSE(beval(b->sym, AP.parse_letter("{p,q}"), AP));
  CHECK(print_bool(b->sym) == "p&!q");
  CHECK(print_bool(parse_schema("[!(p|q)]", AP)->sym) == "!(p|q)");
  CHECK_THROWS_AS(parse_schema("[r]", AP), ParseError);
}

TEST_CASE("satisfying letters come in canonical rank order") {
  auto b = parse_schema("[p|q]", AP)->sym;
  auto ls = satisfying_letters(b, AP);
  REQUIRE(ls.size() == 3);
  CHECK(AP.print_letter(ls[0]) == "{q}");
  CHECK(AP.print_letter(ls[1]) == "{p}");
  CHECK(AP.print_letter(ls[2]) == "{p,q}");
}

TEST_CASE("exact letter predicates pin down one letter") {
  auto b = exact_letter_pred(AP.parse_letter("{p}"), AP);
  auto ls = satisfying_letters(b, AP);
  REQUIRE(ls.size() == 1);
  CHECK(AP.print_letter(ls[0]) == "{p}");
}

TEST_CASE("schema parsing and printing round-trip") {
  for (const char* s : {"[p]", "[true]", "[p&q]*", "[p].[!q]*.[q]",
                        "([p].[q])*", "[p|q]*.[false]"}) {
    CHECK(print_schema(parse_schema(s, AP)) == s);
  }
}

TEST_CASE("star height and simplicity") {
  CHECK(star_height(parse_schema("[p].[q]", AP)) == 0);
  CHECK(star_height(parse_schema("([p].[q]*)", AP)) == 1);
  CHECK(is_simple(parse_schema("[p]*.[q]*", AP)));
  auto nested = s_star(s_seq({s_sym(b_atom("p")),
                              s_star(s_sym(b_atom("q")))}));
  CHECK(star_height(nested) == 2);
  CHECK_FALSE(is_simple(nested));
}

TEST_CASE("translation between word expressions and schemas") {
  auto e = parse_expr("{}.({q}.{p})^w", AP);
  auto r = translate_schematic(e, AP);
  CHECK(print_schema(r) == "[!p&!q].([!p&q].[p&!q])*");
  CHECK(is_exact_letter(r, AP));
  CHECK(print_expr(schema_to_expr(r, AP), AP) == "{}.({q}.{p})^w");
}

TEST_CASE("instances enumerate the language in canonical order") {
  auto r = parse_schema("[p&!q].[q&!p]*", AP);
  auto ws = instances(r, AP, 3);
  REQUIRE(ws.size() == 3);
  CHECK(print_word(ws[0], AP) == "{p}");
  CHECK(print_word(ws[1], AP) == "{p}.{q}");
  CHECK(print_word(ws[2], AP) == "{p}.{q}.{q}");
  CHECK(print_word(min_instance(r, AP), AP) == "{p}");
  // predicates denote letter sets: [p] admits {p} and {p,q}
  CHECK(instances(parse_schema("[p].[q]*", AP), AP, 3).size() == 14);
}

TEST_CASE("schematic fit: star-free schemas are decided exactly") {
  auto f = parse_formula("p & X q", AP);
  auto r = parse_schema("[p].[q]", AP);
  CHECK(schematic_fit(f, r, true, AP).status == FitStatus::Fits);
  auto r2 = parse_schema("[p].[true]", AP);
  auto sf = schematic_fit(f, r2, true, AP);
  CHECK(sf.status == FitStatus::Fails);
  CHECK_FALSE(eval_finite(f, sf.witness, AP));
}

TEST_CASE("schematic fit: monotone negatives use omega semantics") {
  auto f = parse_formula("F(p & q)", AP);
  auto r = parse_schema("([q&!p].[p&!q])*", AP);  // ({q}{p})^w lacks p&q
  CHECK(schematic_fit(f, r, false, AP).status == FitStatus::Fits);
  auto bad = parse_schema("([p&q])*", AP);
  CHECK(schematic_fit(f, bad, false, AP).status == FitStatus::Fails);
}

TEST_CASE("schematic fit: monotone positives use the minimum instance") {
  auto f = parse_formula("F p", AP);
  auto r = parse_schema("[!p&!q].[p&!q].[!p&!q]*", AP);
  CHECK(schematic_fit(f, r, true, AP).status == FitStatus::Fits);
}
