#include "ltlteach/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "ltlteach/errors.hpp"

namespace ltlteach {

static bool valid_atom_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : atoms(std::move(names)) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  for (const auto& a : atoms) {
    if (!valid_atom_name(a))
      throw ParseError("invalid atom name '" + a + "'", 0);
  }
  if (atoms.size() >= 31)
    throw ParseError("alphabet too large (at most 30 atoms supported)", 0);
}

std::optional<size_t> Alphabet::index_of(const std::string& name) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
  if (it != atoms.end() && *it == name)
    return static_cast<size_t>(it - atoms.begin());
  return std::nullopt;
}

uint32_t Alphabet::rank(Letter s) const {
  uint32_t r = 0;
  for (size_t i = 0; i < size(); ++i)
    if (s & (1u << i)) r |= 1u << (size() - 1 - i);
  return r;
}

std::string Alphabet::print_letter(Letter s) const {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < size(); ++i) {
    if (s & (1u << i)) {
      if (!first) out += ",";
      out += atoms[i];
      first = false;
    }
  }
  out += "}";
  return out;
}

static void skip_ws(const std::string& text, size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

Letter Alphabet::parse_letter_at(const std::string& text, size_t& pos) const {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '{')
    throw ParseError("expected '{' to start a letter", pos);
  ++pos;
  Letter s = 0;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return s;
  }
  while (true) {
    skip_ws(text, pos);
    size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected atom name in letter", pos);
    std::string name = text.substr(start, pos - start);
    auto idx = index_of(name);
    if (!idx) throw ParseError("undeclared atom '" + name + "'", start);
    s |= 1u << *idx;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return s;
    }
    throw ParseError("expected ',' or '}' in letter", pos);
  }
}

Letter Alphabet::parse_letter(const std::string& text) const {
  size_t pos = 0;
  Letter s = parse_letter_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after letter", pos);
  return s;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  return a.atoms == b.atoms;
}

std::string print_word(const Word& w, const Alphabet& ap) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += ap.print_letter(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text, const Alphabet& ap) {
  Word w;
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) return w;  // empty word as a value
  while (true) {
    w.push_back(ap.parse_letter_at(text, pos));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      continue;
    }
    if (pos == text.size()) return w;
    throw ParseError("expected '.' or end of word", pos);
  }
}

int word_cmp(const Word& a, const Word& b, const Alphabet& ap) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    uint32_t ra = ap.rank(a[i]), rb = ap.rank(b[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

std::vector<Word> all_words_of_length(const Alphabet& ap, size_t len) {
  // Letters enumerated by ascending canonical rank.
  std::vector<Letter> letters;
  for (uint32_t r = 0; r <= ap.full(); ++r) {
    Letter s = 0;
    for (size_t i = 0; i < ap.size(); ++i)
      if (r & (1u << (ap.size() - 1 - i))) s |= 1u << i;
    letters.push_back(s);
    if (ap.size() == 0) break;
  }
  std::vector<Word> out;
  Word cur(len, 0);
  std::vector<size_t> idx(len, 0);
  while (true) {
    for (size_t i = 0; i < len; ++i) cur[i] = letters[idx[i]];
    out.push_back(cur);
    size_t i = len;
    while (i > 0) {
      --i;
      if (++idx[i] < letters.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (len == 0) return out;
  }
}

}  // namespace ltlteach
