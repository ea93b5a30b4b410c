#pragma once

#include <optional>
#include <vector>

#include "ltlteach/alphabet.hpp"
#include "ltlteach/word_expr.hpp"

namespace ltlteach {

// Coordinates of a mapped position inside a flat word expression:
// segment index in the flattened view, period repetition number, offset
// within the period. Periods beyond 0 only occur for omega segments.
struct EmbedCoord {
  size_t segment;
  size_t period;
  size_t offset;
};

struct Embedding {
  std::vector<size_t> positions;    // indices into the (unfolded) target
  std::vector<EmbedCoord> coords;   // parallel to positions; expr targets only
};

// u <=hom target (anchored: h(0) = 0) or u <=hom+ target (free).
// Greedy-leftmost subsequence matching with subset letter comparison;
// flat expression targets are decided on unfold(target, max(|u|,1)).
std::optional<Embedding> embeds(const Word& u, const Word& target,
                                bool anchored);
std::optional<Embedding> embeds(const Word& u, const WordExprPtr& target,
                                bool anchored);

}  // namespace ltlteach
