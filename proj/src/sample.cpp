#include "ltlteach/sample.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ltlteach/errors.hpp"

namespace ltlteach {

static bool same_example(const LabeledExample& a, const LabeledExample& b) {
  if (a.kind != b.kind || a.positive != b.positive) return false;
  switch (a.kind) {
    case ExampleKind::FiniteWord: return a.word == b.word;
    case ExampleKind::Expr: return same_expr(a.expr, b.expr);
    case ExampleKind::Schema:
      // Structural identity is enough for dedup; printing is canonical.
      return print_schema(a.schema) == print_schema(b.schema);
  }
  return false;
}

static void add_dedup(Sample& s, LabeledExample ex) {
  for (const auto& e : s.examples)
    if (same_example(e, ex)) return;
  s.examples.push_back(std::move(ex));
}

void Sample::add_word(bool positive, Word w) {
  add_dedup(*this, {ExampleKind::FiniteWord, positive, std::move(w), nullptr,
                    nullptr});
}

void Sample::add_expr(bool positive, WordExprPtr e) {
  add_dedup(*this, {ExampleKind::Expr, positive, {}, std::move(e), nullptr});
}

void Sample::add_schema(bool positive, SchematicExprPtr r) {
  add_dedup(*this, {ExampleKind::Schema, positive, {}, nullptr, std::move(r)});
}

size_t Sample::count(bool positive) const {
  return std::count_if(examples.begin(), examples.end(),
                       [&](const LabeledExample& e) {
                         return e.positive == positive;
                       });
}

std::string print_example(const LabeledExample& ex, const Alphabet& ap) {
  std::string line = ex.positive ? "+ " : "- ";
  switch (ex.kind) {
    case ExampleKind::FiniteWord:
      line += "word " + print_word(ex.word, ap);
      break;
    case ExampleKind::Expr:
      line += "expr " + print_expr(ex.expr, ap);
      break;
    case ExampleKind::Schema:
      line += "schema " + print_schema(ex.schema);
      break;
  }
  return line;
}

std::string print_sample(const Sample& s) {
  std::string out = "ap:";
  for (const auto& a : s.ap.atoms) out += " " + a;
  out += "\n";
  for (const auto& ex : s.examples) out += print_example(ex, s.ap) + "\n";
  return out;
}

Sample parse_sample(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Sample s;
  bool have_ap = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (!have_ap) {
      if (tok != "ap:")
        throw ParseError("sample must start with an 'ap:' header", lineno);
      std::vector<std::string> atoms;
      while (ls >> tok) atoms.push_back(tok);
      s.ap = Alphabet(atoms);
      have_ap = true;
      continue;
    }
    if (tok != "+" && tok != "-")
      throw ParseError("example line must start with '+' or '-'", lineno);
    bool positive = tok == "+";
    std::string kind;
    if (!(ls >> kind))
      throw ParseError("missing example kind (word/expr/schema)", lineno);
    std::string payload;
    std::getline(ls, payload);
    if (kind == "word")
      s.add_word(positive, parse_word(payload, s.ap));
    else if (kind == "expr")
      s.add_expr(positive, parse_expr(payload, s.ap));
    else if (kind == "schema")
      s.add_schema(positive, parse_schema(payload, s.ap));
    else
      throw ParseError("unknown example kind '" + kind + "'", lineno);
  }
  if (!have_ap) throw ParseError("empty sample: no 'ap:' header", 0);
  return s;
}

Sample load_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sample(buf.str());
}

void save_sample(const Sample& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write sample file: " + path);
  out << print_sample(s);
}

}  // namespace ltlteach
