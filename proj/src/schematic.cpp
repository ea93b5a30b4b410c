#include "ltlteach/schematic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "ltlteach/characterize.hpp"
#include "ltlteach/errors.hpp"

namespace ltlteach {

static BoolExprPtr bmk(BOp op, std::string atom, BoolExprPtr l, BoolExprPtr r) {
  auto b = std::make_shared<BoolExpr>();
  b->op = op;
  b->atom = std::move(atom);
  b->lhs = std::move(l);
  b->rhs = std::move(r);
  return b;
}

BoolExprPtr b_true() { return bmk(BOp::True, "", nullptr, nullptr); }
BoolExprPtr b_false() { return bmk(BOp::False, "", nullptr, nullptr); }
BoolExprPtr b_atom(std::string n) { return bmk(BOp::Atom, std::move(n), nullptr, nullptr); }
BoolExprPtr b_not(BoolExprPtr x) { return bmk(BOp::Not, "", std::move(x), nullptr); }
BoolExprPtr b_and(BoolExprPtr a, BoolExprPtr b) { return bmk(BOp::And, "", std::move(a), std::move(b)); }
BoolExprPtr b_or(BoolExprPtr a, BoolExprPtr b) { return bmk(BOp::Or, "", std::move(a), std::move(b)); }

bool beval(const BoolExprPtr& b, Letter s, const Alphabet& ap) {
  switch (b->op) {
    case BOp::True: return true;
    case BOp::False: return false;
    case BOp::Atom: {
      auto idx = ap.index_of(b->atom);
      if (!idx) throw EvalError("atom '" + b->atom + "' not in alphabet");
      return (s >> *idx) & 1u;
    }
    case BOp::Not: return !beval(b->lhs, s, ap);
    case BOp::And: return beval(b->lhs, s, ap) && beval(b->rhs, s, ap);
    case BOp::Or: return beval(b->lhs, s, ap) || beval(b->rhs, s, ap);
  }
  return false;
}

std::vector<Letter> satisfying_letters(const BoolExprPtr& b,
                                       const Alphabet& ap) {
  std::vector<Letter> out;
  for (const Word& w : all_words_of_length(ap, 1))
    if (beval(b, w[0], ap)) out.push_back(w[0]);
  return out;
}

BoolExprPtr exact_letter_pred(Letter s, const Alphabet& ap) {
  BoolExprPtr b;
  for (size_t i = 0; i < ap.size(); ++i) {
    BoolExprPtr lit = (s >> i) & 1u ? b_atom(ap.atoms[i])
                                    : b_not(b_atom(ap.atoms[i]));
    b = b ? b_and(b, lit) : lit;
  }
  return b ? b : b_true();  // empty alphabet: the single letter {}
}

static SchematicExprPtr smk(SOp op) {
  auto r = std::make_shared<SchematicExpr>();
  r->op = op;
  return r;
}

SchematicExprPtr s_sym(BoolExprPtr b) {
  auto r = smk(SOp::Sym);
  const_cast<SchematicExpr*>(r.get())->sym = std::move(b);
  return r;
}

SchematicExprPtr s_seq(std::vector<SchematicExprPtr> parts) {
  std::vector<SchematicExprPtr> flat;
  for (auto& p : parts) {
    if (p->op == SOp::Seq)
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.size() == 1) return flat[0];
  auto r = smk(SOp::Seq);
  const_cast<SchematicExpr*>(r.get())->children = std::move(flat);
  return r;
}

SchematicExprPtr s_star(SchematicExprPtr child) {
  auto r = smk(SOp::Star);
  const_cast<SchematicExpr*>(r.get())->child = std::move(child);
  return r;
}

size_t star_height(const SchematicExprPtr& r) {
  switch (r->op) {
    case SOp::Sym: return 0;
    case SOp::Star: return 1 + star_height(r->child);
    case SOp::Seq: {
      size_t h = 0;
      for (const auto& c : r->children) h = std::max(h, star_height(c));
      return h;
    }
  }
  return 0;
}

bool is_simple(const SchematicExprPtr& r) { return star_height(r) <= 1; }

bool is_exact_letter(const SchematicExprPtr& r, const Alphabet& ap) {
  switch (r->op) {
    case SOp::Sym: return satisfying_letters(r->sym, ap).size() == 1;
    case SOp::Star: return is_exact_letter(r->child, ap);
    case SOp::Seq:
      for (const auto& c : r->children)
        if (!is_exact_letter(c, ap)) return false;
      return true;
  }
  return false;
}

SchematicExprPtr translate_schematic(const WordExprPtr& e, const Alphabet& ap) {
  if (!is_flat(e)) throw EvalError("cannot translate a non-flat expression");
  switch (e->op) {
    case WOp::Empty:
      throw EvalError("cannot translate the empty word into a schema");
    case WOp::Lit: return s_sym(exact_letter_pred(e->lit, ap));
    case WOp::Concat:
      return s_seq({translate_schematic(e->lhs, ap),
                    translate_schematic(e->rhs, ap)});
    case WOp::Omega: return s_star(translate_schematic(e->child, ap));
  }
  throw EvalError("unreachable");
}

WordExprPtr schema_to_expr(const SchematicExprPtr& r, const Alphabet& ap) {
  switch (r->op) {
    case SOp::Sym: {
      auto letters = satisfying_letters(r->sym, ap);
      if (letters.size() != 1)
        throw EvalError("schema predicate does not denote a unique letter");
      return w_lit(letters[0]);
    }
    case SOp::Star: return w_omega(schema_to_expr(r->child, ap));
    case SOp::Seq: {
      WordExprPtr e = w_empty();
      for (size_t i = r->children.size(); i > 0; --i)
        e = w_concat(schema_to_expr(r->children[i - 1], ap), e);
      return e;
    }
  }
  throw EvalError("unreachable");
}

Word min_instance(const SchematicExprPtr& r, const Alphabet& ap) {
  switch (r->op) {
    case SOp::Sym: {
      auto letters = satisfying_letters(r->sym, ap);
      if (letters.size() != 1)
        throw EvalError("min_instance requires an exact-letter schema");
      return {letters[0]};
    }
    case SOp::Star: return {};
    case SOp::Seq: {
      Word out;
      for (const auto& c : r->children) {
        Word part = min_instance(c, ap);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
  }
  return {};
}

// All words of L(r) up to max_len (including the empty word when r accepts it).
static std::vector<Word> gen_instances(const SchematicExprPtr& r,
                                       const Alphabet& ap, size_t max_len) {
  std::set<Word> out;
  switch (r->op) {
    case SOp::Sym: {
      if (max_len >= 1)
        for (Letter l : satisfying_letters(r->sym, ap)) out.insert({l});
      break;
    }
    case SOp::Star: {
      auto base = gen_instances(r->child, ap, max_len);
      std::set<Word> reach = {Word{}};
      bool grew = true;
      while (grew) {
        grew = false;
        std::set<Word> next;
        for (const Word& a : reach)
          for (const Word& b : base) {
            if (a.size() + b.size() > max_len) continue;
            Word c = a;
            c.insert(c.end(), b.begin(), b.end());
            if (!reach.count(c) && !next.count(c)) {
              next.insert(c);
              grew = true;
            }
          }
        reach.insert(next.begin(), next.end());
      }
      out = std::move(reach);
      break;
    }
    case SOp::Seq: {
      std::set<Word> acc = {Word{}};
      for (const auto& c : r->children) {
        auto part = gen_instances(c, ap, max_len);
        std::set<Word> next;
        for (const Word& a : acc)
          for (const Word& b : part) {
            if (a.size() + b.size() > max_len) continue;
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            next.insert(w);
          }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      out = std::move(acc);
      break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Word> instances(const SchematicExprPtr& r, const Alphabet& ap,
                            size_t max_len) {
  std::vector<Word> all = gen_instances(r, ap, max_len);
  // Zero-length strings are not words; a schema whose language contains only
  // eps has no instances.
  all.erase(std::remove_if(all.begin(), all.end(),
                           [](const Word& w) { return w.empty(); }),
            all.end());
  std::sort(all.begin(), all.end(), WordLess{&ap});
  return all;
}

static bool has_leading_star(const SchematicExprPtr& r) {
  switch (r->op) {
    case SOp::Sym: return false;
    case SOp::Star: return true;
    case SOp::Seq:
      return r->children.empty() ? false : has_leading_star(r->children[0]);
  }
  return false;
}

SchematicFit schematic_fit(const FormulaPtr& f, const SchematicExprPtr& r,
                           bool positive, const Alphabet& ap,
                           size_t enum_len) {
  bool monotone = rewritable_to_sev(f);
  // Star-free schemas denote a finite language of fixed length: decide by
  // full enumeration (length = number of symbols).
  if (star_height(r) == 0) {
    // Every instance of a star-free schema has length = number of symbols.
    std::function<size_t(const SchematicExprPtr&)> nsyms =
        [&](const SchematicExprPtr& x) -> size_t {
      if (x->op == SOp::Sym) return 1;
      size_t n = 0;
      for (const auto& c : x->children) n += nsyms(c);
      return n;
    };
    size_t len = nsyms(r);
    for (const Word& w : instances(r, ap, len)) {
      bool sat = eval_finite(f, w, ap);
      if (sat != positive) return {FitStatus::Fails, w};
    }
    return {FitStatus::Fits, {}};
  }
  if (!positive && monotone && is_simple(r) && is_exact_letter(r, ap)) {
    // Exact by the omega-to-star lemma: some instance satisfies f iff the
    // omega word obtained by star -> omega power satisfies f.
    WordExprPtr e = schema_to_expr(r, ap);
    if (!eval_monotone(f, e, ap)) return {FitStatus::Fits, {}};
    // Extract a satisfying instance: unfolding with enough copies contains
    // the canonical embedding's image.
    FormulaPtr rew = rewrite_for_fragment(f, RewriteTarget::StrictEventually);
    size_t k = 1;
    for (const Word& c : canonical_set(rew, ap)) k = std::max(k, c.size());
    Word wit = unfold(e, k);
    return {FitStatus::Fails, wit};
  }
  if (positive && monotone && is_simple(r) && is_exact_letter(r, ap) &&
      !has_leading_star(r)) {
    // Monotone extension lemma: every instance extends min_instance by
    // inserting positions after the first letter, so the minimum decides.
    Word mi = min_instance(r, ap);
    if (mi.empty()) return {FitStatus::Unknown, {}};
    if (eval_finite(f, mi, ap)) return {FitStatus::Fits, {}};
    return {FitStatus::Fails, mi};
  }
  // Bounded enumeration: conclusive only on a failing instance.
  for (const Word& w : instances(r, ap, enum_len)) {
    bool sat = eval_finite(f, w, ap);
    if (sat != positive) return {FitStatus::Fails, w};
  }
  return {FitStatus::Unknown, {}};
}

std::string print_bool(const BoolExprPtr& b) {
  // Precedence: | lowest, then &, then !/leaf.
  std::function<std::string(const BoolExprPtr&, int)> rec =
      [&](const BoolExprPtr& x, int level) -> std::string {
    std::string out;
    int mine = 2;
    switch (x->op) {
      case BOp::True: return "true";
      case BOp::False: return "false";
      case BOp::Atom: return x->atom;
      case BOp::Not: return "!" + rec(x->lhs, 2);
      case BOp::And:
        mine = 1;
        out = rec(x->lhs, mine) + "&" + rec(x->rhs, mine);
        break;
      case BOp::Or:
        mine = 0;
        out = rec(x->lhs, mine) + "|" + rec(x->rhs, mine);
        break;
    }
    if (mine < level) return "(" + out + ")";
    return out;
  };
  return rec(b, 0);
}

std::string print_schema(const SchematicExprPtr& r) {
  switch (r->op) {
    case SOp::Sym: return "[" + print_bool(r->sym) + "]";
    case SOp::Star:
      if (r->child->op == SOp::Sym) return print_schema(r->child) + "*";
      return "(" + print_schema(r->child) + ")*";
    case SOp::Seq: {
      std::string out;
      for (size_t i = 0; i < r->children.size(); ++i) {
        if (i) out += ".";
        out += print_schema(r->children[i]);
      }
      return out;
    }
  }
  return "";
}

namespace {

struct SchemaParser {
  const std::string& text;
  const Alphabet& ap;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  BoolExprPtr parse_bool_or() {
    BoolExprPtr b = parse_bool_and();
    while (eat('|')) b = b_or(b, parse_bool_and());
    return b;
  }

  BoolExprPtr parse_bool_and() {
    BoolExprPtr b = parse_bool_unary();
    while (eat('&')) b = b_and(b, parse_bool_unary());
    return b;
  }

  BoolExprPtr parse_bool_unary() {
    if (eat('!')) return b_not(parse_bool_unary());
    if (eat('(')) {
      BoolExprPtr b = parse_bool_or();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return b;
    }
    std::string id = ident();
    if (id == "true") return b_true();
    if (id == "false") return b_false();
    if (id.empty()) throw ParseError("expected letter predicate", pos);
    if (!ap.index_of(id))
      throw ParseError("undeclared atom '" + id + "'", pos);
    return b_atom(id);
  }

  SchematicExprPtr parse_factor() {
    SchematicExprPtr base;
    if (eat('[')) {
      BoolExprPtr b = parse_bool_or();
      if (!eat(']')) throw ParseError("expected ']'", pos);
      base = s_sym(b);
    } else if (eat('(')) {
      base = parse_seq();
      if (!eat(')')) throw ParseError("expected ')'", pos);
    } else {
      throw ParseError("expected '[' or '(' in schema", pos);
    }
    if (eat('*')) return s_star(base);
    return base;
  }

  SchematicExprPtr parse_seq() {
    std::vector<SchematicExprPtr> parts{parse_factor()};
    while (eat('.')) parts.push_back(parse_factor());
    return s_seq(std::move(parts));
  }
};

}  // namespace

SchematicExprPtr parse_schema(const std::string& text, const Alphabet& ap) {
  SchemaParser p{text, ap};
  SchematicExprPtr r = p.parse_seq();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input after schema", p.pos);
  return r;
}

}  // namespace ltlteach
