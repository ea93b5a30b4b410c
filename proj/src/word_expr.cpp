#include "ltlteach/word_expr.hpp"

#include <cctype>
#include <functional>

#include "ltlteach/errors.hpp"

namespace ltlteach {

static WordExprPtr mk(WOp op) {
  auto e = std::make_shared<WordExpr>();
  e->op = op;
  return e;
}

WordExprPtr w_lit(Letter s) {
  auto e = mk(WOp::Lit);
  const_cast<WordExpr*>(e.get())->lit = s;
  return e;
}

WordExprPtr w_empty() { return mk(WOp::Empty); }

WordExprPtr w_concat(WordExprPtr a, WordExprPtr b) {
  if (!a || a->op == WOp::Empty) return b ? b : w_empty();
  if (!b || b->op == WOp::Empty) return a;
  if (a->op == WOp::Concat)
    return w_concat(a->lhs, w_concat(a->rhs, std::move(b)));
  auto e = mk(WOp::Concat);
  auto* m = const_cast<WordExpr*>(e.get());
  m->lhs = std::move(a);
  m->rhs = std::move(b);
  return e;
}

WordExprPtr w_omega(WordExprPtr child) {
  if (!child || child->op == WOp::Empty) return w_empty();  // ()^w denotes eps
  auto e = mk(WOp::Omega);
  const_cast<WordExpr*>(e.get())->child = std::move(child);
  return e;
}

WordExprPtr word_to_expr(const Word& w) {
  WordExprPtr e = w_empty();
  for (size_t i = w.size(); i > 0; --i) e = w_concat(w_lit(w[i - 1]), e);
  return e;
}

bool same_expr(const WordExprPtr& a, const WordExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op) return false;
  switch (a->op) {
    case WOp::Lit: return a->lit == b->lit;
    case WOp::Empty: return true;
    case WOp::Concat:
      return same_expr(a->lhs, b->lhs) && same_expr(a->rhs, b->rhs);
    case WOp::Omega: return same_expr(a->child, b->child);
  }
  return false;
}

size_t expr_size(const WordExprPtr& e) {
  if (!e) return 0;
  switch (e->op) {
    case WOp::Lit:
    case WOp::Empty: return 1;
    case WOp::Concat: return 1 + expr_size(e->lhs) + expr_size(e->rhs);
    case WOp::Omega: return 1 + expr_size(e->child);
  }
  return 0;
}

static bool flat_rec(const WordExprPtr& e, bool under_omega) {
  switch (e->op) {
    case WOp::Lit:
    case WOp::Empty: return true;
    case WOp::Concat:
      return flat_rec(e->lhs, under_omega) && flat_rec(e->rhs, under_omega);
    case WOp::Omega:
      return !under_omega && flat_rec(e->child, true);
  }
  return false;
}

bool is_flat(const WordExprPtr& e) { return flat_rec(e, false); }

bool has_omega(const WordExprPtr& e) {
  switch (e->op) {
    case WOp::Lit:
    case WOp::Empty: return false;
    case WOp::Concat: return has_omega(e->lhs) || has_omega(e->rhs);
    case WOp::Omega: return true;
  }
  return false;
}

Ordinal expr_length(const WordExprPtr& e) {
  switch (e->op) {
    case WOp::Empty: return Ordinal::zero();
    case WOp::Lit: return Ordinal::finite(1);
    case WOp::Concat:
      return ordinal_add(expr_length(e->lhs), expr_length(e->rhs));
    case WOp::Omega: return times_omega(expr_length(e->child));
  }
  return Ordinal::zero();
}

WordExprPtr complement_word(const WordExprPtr& e, const Alphabet& ap) {
  switch (e->op) {
    case WOp::Empty: return e;
    case WOp::Lit: return w_lit(ap.complement(e->lit));
    case WOp::Concat:
      return w_concat(complement_word(e->lhs, ap), complement_word(e->rhs, ap));
    case WOp::Omega: return w_omega(complement_word(e->child, ap));
  }
  return e;
}

std::vector<Segment> flatten(const WordExprPtr& e) {
  if (!is_flat(e)) throw EvalError("word expression has nested omega powers");
  std::vector<Segment> segs;
  Word current;
  // Flat: omega bodies contain no omegas, so unfold(.,1) yields their word.
  std::function<void(const WordExprPtr&)> walk = [&](const WordExprPtr& x) {
    switch (x->op) {
      case WOp::Empty: break;
      case WOp::Lit: current.push_back(x->lit); break;
      case WOp::Concat:
        walk(x->lhs);
        walk(x->rhs);
        break;
      case WOp::Omega: {
        if (!current.empty()) {
          segs.push_back({current, false});
          current.clear();
        }
        Word period = unfold(x->child, 1);
        if (!period.empty()) segs.push_back({period, true});
        break;
      }
    }
  };
  walk(e);
  if (!current.empty()) segs.push_back({current, false});
  return segs;
}

Word unfold(const WordExprPtr& e, size_t k) {
  if (!is_flat(e)) throw EvalError("cannot unfold a non-flat word expression");
  Word out;
  std::function<void(const WordExprPtr&)> walk = [&](const WordExprPtr& x) {
    switch (x->op) {
      case WOp::Empty: break;
      case WOp::Lit: out.push_back(x->lit); break;
      case WOp::Concat:
        walk(x->lhs);
        walk(x->rhs);
        break;
      case WOp::Omega:
        for (size_t i = 0; i < k; ++i) walk(x->child);
        break;
    }
  };
  walk(e);
  return out;
}

Word materialize_prefix(const WordExprPtr& e, size_t len) {
  Word out;
  for (const Segment& s : flatten(e)) {
    if (s.omega) {
      while (out.size() < len)
        for (Letter l : s.period) {
          out.push_back(l);
          if (out.size() >= len) break;
        }
    } else {
      for (Letter l : s.period) out.push_back(l);
    }
    if (out.size() >= len) break;
  }
  if (out.size() < len)
    throw EvalError("word expression shorter than requested prefix");
  out.resize(len);
  return out;
}

std::string print_expr(const WordExprPtr& e, const Alphabet& ap) {
  switch (e->op) {
    case WOp::Empty: return "<empty>";
    case WOp::Lit: return ap.print_letter(e->lit);
    case WOp::Concat:
      return print_expr(e->lhs, ap) + "." + print_expr(e->rhs, ap);
    case WOp::Omega:
      if (e->child->op == WOp::Lit)
        return print_expr(e->child, ap) + "^w";
      return "(" + print_expr(e->child, ap) + ")^w";
  }
  return "";
}

namespace {

struct ExprParser {
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

  WordExprPtr parse_factor() {
    skip_ws();
    WordExprPtr base;
    if (eat('(')) {
      base = parse_seq();
      if (!eat(')')) throw ParseError("expected ')'", pos);
    } else {
      base = w_lit(ap.parse_letter_at(text, pos));
    }
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == 'w') {
      pos += 2;
      return w_omega(base);
    }
    return base;
  }

  WordExprPtr parse_seq() {
    WordExprPtr e = parse_factor();
    while (eat('.')) e = w_concat(e, parse_factor());
    return e;
  }
};

}  // namespace

WordExprPtr parse_expr(const std::string& text, const Alphabet& ap) {
  ExprParser p{text, ap};
  WordExprPtr e = p.parse_seq();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input after word expression", p.pos);
  return e;
}

}  // namespace ltlteach
