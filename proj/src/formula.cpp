#include "ltlteach/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ltlteach/errors.hpp"

namespace ltlteach {

static FormulaPtr mk(FOp op, std::string atom, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->atom = std::move(atom);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr f_true() { return mk(FOp::True, "", nullptr, nullptr); }
FormulaPtr f_false() { return mk(FOp::False, "", nullptr, nullptr); }
FormulaPtr f_atom(std::string n) { return mk(FOp::Atom, std::move(n), nullptr, nullptr); }
FormulaPtr f_not(FormulaPtr x) { return mk(FOp::Not, "", std::move(x), nullptr); }
FormulaPtr f_next(FormulaPtr x) { return mk(FOp::Next, "", std::move(x), nullptr); }
FormulaPtr f_ev(FormulaPtr x) { return mk(FOp::Eventually, "", std::move(x), nullptr); }
FormulaPtr f_sev(FormulaPtr x) { return mk(FOp::StrictEventually, "", std::move(x), nullptr); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return mk(FOp::And, "", std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return mk(FOp::Or, "", std::move(a), std::move(b)); }
FormulaPtr f_until(FormulaPtr a, FormulaPtr b) { return mk(FOp::Until, "", std::move(a), std::move(b)); }

size_t formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->atom != b->atom) return false;
  return same_formula(a->lhs, b->lhs) && same_formula(a->rhs, b->rhs);
}

static int op_rank(FOp op) {
  switch (op) {
    case FOp::True: return 0;
    case FOp::False: return 1;
    case FOp::Atom: return 2;
    case FOp::Not: return 3;
    case FOp::Next: return 4;
    case FOp::StrictEventually: return 5;
    case FOp::Eventually: return 6;
    case FOp::And: return 7;
    case FOp::Or: return 8;
    case FOp::Until: return 9;
  }
  return 10;
}

int formula_cmp(const FormulaPtr& a, const FormulaPtr& b) {
  size_t sa = formula_size(a), sb = formula_size(b);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (op_rank(a->op) != op_rank(b->op))
    return op_rank(a->op) < op_rank(b->op) ? -1 : 1;
  if (a->op == FOp::Atom) {
    if (a->atom != b->atom) return a->atom < b->atom ? -1 : 1;
    return 0;
  }
  if (a->lhs) {
    int c = formula_cmp(a->lhs, b->lhs);
    if (c) return c;
  }
  if (a->rhs) return formula_cmp(a->rhs, b->rhs);
  return 0;
}

// ---------------------------------------------------------------- parsing

namespace {

struct FormulaParser {
  const std::string& text;
  const Alphabet& ap;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  // Next identifier-like token ([A-Za-z][A-Za-z0-9_]*) without consuming.
  std::string peek_ident() {
    skip_ws();
    size_t p = pos;
    if (p >= text.size() || !std::isalpha(static_cast<unsigned char>(text[p])))
      return "";
    size_t start = p;
    while (p < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[p])) ||
            text[p] == '_'))
      ++p;
    return text.substr(start, p - start);
  }

  void consume_ident(const std::string& id) { skip_ws(); pos += id.size(); }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (eat('|')) f = f_or(f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_until();
    while (eat('&')) f = f_and(f, parse_until());
    return f;
  }

  FormulaPtr parse_until() {
    FormulaPtr f = parse_unary();
    if (peek_ident() == "U") {
      consume_ident("U");
      FormulaPtr rhs = parse_unary();
      if (peek_ident() == "U")
        throw ParseError("'U' is non-associative; parenthesize chains", pos);
      return f_until(f, rhs);
    }
    return f;
  }

  FormulaPtr parse_unary() {
    if (eat('!')) return f_not(parse_unary());
    std::string id = peek_ident();
    if (id == "X") { consume_ident(id); return f_next(parse_unary()); }
    if (id == "F") { consume_ident(id); return f_ev(parse_unary()); }
    if (id == "sF") { consume_ident(id); return f_sev(parse_unary()); }
    if (id == "G") { consume_ident(id); return f_not(f_ev(f_not(parse_unary()))); }
    if (id == "sG") { consume_ident(id); return f_not(f_sev(f_not(parse_unary()))); }
    if (eat('(')) {
      FormulaPtr f = parse_or();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return f;
    }
    if (id == "true") { consume_ident(id); return f_true(); }
    if (id == "false") { consume_ident(id); return f_false(); }
    if (id.empty())
      throw ParseError("expected formula (atom, constant, operator or '(')", pos);
    if (id == "U")
      throw ParseError("unexpected 'U'", pos);
    for (char c : id)
      if (std::isupper(static_cast<unsigned char>(c)))
        throw ParseError("unknown operator '" + id + "'", pos);
    if (!ap.index_of(id))
      throw ParseError("undeclared atom '" + id + "'", pos);
    consume_ident(id);
    return f_atom(id);
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Alphabet& ap) {
  FormulaParser p{text, ap};
  FormulaPtr f = p.parse_or();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input after formula", p.pos);
  return f;
}

// --------------------------------------------------------------- printing

// Precedence levels for printing: | = 0, & = 1, U = 2, unary/atomic = 3.
static int print_level(FOp op) {
  switch (op) {
    case FOp::Or: return 0;
    case FOp::And: return 1;
    case FOp::Until: return 2;
    default: return 3;
  }
}

static void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
  bool parens = print_level(f->op) < min_level;
  if (parens) out += "(";
  switch (f->op) {
    case FOp::True: out += "true"; break;
    case FOp::False: out += "false"; break;
    case FOp::Atom: out += f->atom; break;
    case FOp::Not: out += "!"; print_rec(f->lhs, 3, out); break;
    case FOp::Next: out += "X "; print_rec(f->lhs, 3, out); break;
    case FOp::Eventually: out += "F "; print_rec(f->lhs, 3, out); break;
    case FOp::StrictEventually: out += "sF "; print_rec(f->lhs, 3, out); break;
    case FOp::And:
      print_rec(f->lhs, 1, out);
      out += " & ";
      print_rec(f->rhs, 2, out);
      break;
    case FOp::Or:
      print_rec(f->lhs, 0, out);
      out += " | ";
      print_rec(f->rhs, 1, out);
      break;
    case FOp::Until:
      print_rec(f->lhs, 3, out);
      out += " U ";
      print_rec(f->rhs, 3, out);
      break;
  }
  if (parens) out += ")";
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

// -------------------------------------------------------------- signature

Signature signature(const FormulaPtr& f) {
  if (!f) return 0;
  Signature s = signature(f->lhs) | signature(f->rhs);
  switch (f->op) {
    case FOp::True: s |= SIG_TOP; break;
    case FOp::False: s |= SIG_BOT; break;
    case FOp::Atom: break;
    case FOp::Not: s |= SIG_NOT; break;
    case FOp::And: s |= SIG_AND; break;
    case FOp::Or: s |= SIG_OR; break;
    case FOp::Next: s |= SIG_X; break;
    case FOp::Eventually: s |= SIG_F; break;
    case FOp::StrictEventually: s |= SIG_FS; break;
    case FOp::Until: s |= SIG_U; break;
  }
  return s;
}

static const std::pair<Signature, const char*> kSigNames[] = {
    {SIG_U, "U"},   {SIG_F, "F"},     {SIG_FS, "sF"},
    {SIG_X, "X"},   {SIG_AND, "&"},   {SIG_OR, "|"},
    {SIG_NOT, "!"}, {SIG_TOP, "true"}, {SIG_BOT, "false"}};

std::string print_signature(Signature s) {
  std::string out = "{";
  bool first = true;
  for (auto [bit, name] : kSigNames) {
    if (s & bit) {
      if (!first) out += ",";
      out += name;
      first = false;
    }
  }
  return out + "}";
}

Signature parse_ops(const std::string& commaList) {
  Signature s = 0;
  size_t pos = 0;
  while (pos <= commaList.size()) {
    size_t end = commaList.find(',', pos);
    if (end == std::string::npos) end = commaList.size();
    std::string tok = commaList.substr(pos, end - pos);
    // trim
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.pop_back();
    if (!tok.empty()) {
      bool found = false;
      for (auto [bit, name] : kSigNames) {
        if (tok == name) {
          s |= bit;
          found = true;
          break;
        }
      }
      if (!found) throw ParseError("unknown operator tag '" + tok + "'", pos);
    }
    if (end == commaList.size()) break;
    pos = end + 1;
  }
  return s;
}

// ------------------------------------------------------------- evaluation

namespace {
struct Evaluator {
  const Word& w;
  const Alphabet& ap;

  bool run(const Formula* f, size_t i) const {
    switch (f->op) {
      case FOp::True: return true;
      case FOp::False: return false;
      case FOp::Atom: {
        auto idx = ap.index_of(f->atom);
        if (!idx) throw EvalError("atom '" + f->atom + "' not in alphabet");
        return (w[i] >> *idx) & 1u;
      }
      case FOp::Not: return !run(f->lhs.get(), i);
      case FOp::And: return run(f->lhs.get(), i) && run(f->rhs.get(), i);
      case FOp::Or: return run(f->lhs.get(), i) || run(f->rhs.get(), i);
      case FOp::Next: return i + 1 < w.size() && run(f->lhs.get(), i + 1);
      case FOp::Eventually:
        for (size_t j = i; j < w.size(); ++j)
          if (run(f->lhs.get(), j)) return true;
        return false;
      case FOp::StrictEventually:
        for (size_t j = i + 1; j < w.size(); ++j)
          if (run(f->lhs.get(), j)) return true;
        return false;
      case FOp::Until:
        // Table 1: exists g >= i with rhs at g and lhs at all of [i,g);
        // g = i is allowed (vacuous universal part).
        for (size_t g = i; g < w.size(); ++g) {
          if (run(f->rhs.get(), g)) return true;
          if (!run(f->lhs.get(), g)) return false;
        }
        return false;
    }
    return false;
  }
};
}  // namespace

bool eval_finite(const FormulaPtr& f, const Word& w, const Alphabet& ap) {
  if (w.empty()) throw EvalError("models are words of length >= 1");
  return Evaluator{w, ap}.run(f.get(), 0);
}

size_t x_depth(const FormulaPtr& f) {
  if (!f) return 0;
  size_t d = std::max(x_depth(f->lhs), x_depth(f->rhs));
  if (f->op == FOp::Next) ++d;
  return d;
}

size_t temporal_depth(const FormulaPtr& f) {
  if (!f) return 0;
  size_t d = std::max(temporal_depth(f->lhs), temporal_depth(f->rhs));
  switch (f->op) {
    case FOp::Next:
    case FOp::Eventually:
    case FOp::StrictEventually:
    case FOp::Until: ++d; break;
    default: break;
  }
  return d;
}

}  // namespace ltlteach
