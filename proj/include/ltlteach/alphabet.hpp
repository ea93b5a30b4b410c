#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ltlteach {

// A letter is a subset of the atomic propositions, bit i <=> atoms[i].
using Letter = uint32_t;

struct Alphabet {
  std::vector<std::string> atoms;  // sorted alphabetically, unique

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return atoms.size(); }
  std::optional<size_t> index_of(const std::string& name) const;
  Letter full() const { return size() >= 32 ? ~0u : ((1u << size()) - 1u); }
  Letter complement(Letter s) const { return full() & ~s; }

  // Canonical rank of a letter: bit pattern read with the alphabetically
  // first atom as the most significant bit, so over {p,q}: {} < {q} < {p} < {p,q}.
  uint32_t rank(Letter s) const;

  std::string print_letter(Letter s) const;

  // Parses "{p,q}" / "{}" starting at text[pos]; advances pos past the letter.
  Letter parse_letter_at(const std::string& text, size_t& pos) const;
  Letter parse_letter(const std::string& text) const;
};

bool operator==(const Alphabet& a, const Alphabet& b);

using Word = std::vector<Letter>;

inline bool subset(Letter a, Letter b) { return (a & ~b) == 0; }

std::string print_word(const Word& w, const Alphabet& ap);
Word parse_word(const std::string& text, const Alphabet& ap);  // "{p}.{q}.{}"

// Canonical word order: shortlex, letters compared by Alphabet::rank.
int word_cmp(const Word& a, const Word& b, const Alphabet& ap);

struct WordLess {
  const Alphabet* ap;
  bool operator()(const Word& a, const Word& b) const {
    return word_cmp(a, b, *ap) < 0;
  }
};

// All words over ap of the given exact length, in canonical order.
std::vector<Word> all_words_of_length(const Alphabet& ap, size_t len);

}  // namespace ltlteach
