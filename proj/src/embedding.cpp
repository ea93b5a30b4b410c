#include "ltlteach/embedding.hpp"

namespace ltlteach {

static std::optional<std::vector<size_t>> greedy(const Word& u,
                                                 const Word& target,
                                                 bool anchored) {
  std::vector<size_t> h;
  h.reserve(u.size());
  if (u.empty()) {
    if (anchored) return std::nullopt;  // anchored needs a first position
    return h;                           // empty word free-embeds everywhere
  }
  size_t j = 0;
  if (anchored) {
    if (target.empty() || !subset(u[0], target[0])) return std::nullopt;
    h.push_back(0);
    j = 1;
  }
  for (size_t i = h.size(); i < u.size(); ++i) {
    while (j < target.size() && !subset(u[i], target[j])) ++j;
    if (j >= target.size()) return std::nullopt;
    h.push_back(j++);
  }
  return h;
}

std::optional<Embedding> embeds(const Word& u, const Word& target,
                                bool anchored) {
  auto h = greedy(u, target, anchored);
  if (!h) return std::nullopt;
  return Embedding{std::move(*h), {}};
}

std::optional<Embedding> embeds(const Word& u, const WordExprPtr& target,
                                bool anchored) {
  std::vector<Segment> segs = flatten(target);
  size_t k = u.size() > 0 ? u.size() : 1;
  Word t;
  std::vector<EmbedCoord> coords;
  for (size_t s = 0; s < segs.size(); ++s) {
    size_t reps = segs[s].omega ? k : 1;
    for (size_t r = 0; r < reps; ++r)
      for (size_t o = 0; o < segs[s].period.size(); ++o) {
        t.push_back(segs[s].period[o]);
        coords.push_back({s, r, o});
      }
  }
  auto h = greedy(u, t, anchored);
  if (!h) return std::nullopt;
  Embedding out;
  out.positions = std::move(*h);
  for (size_t p : out.positions) out.coords.push_back(coords[p]);
  return out;
}

}  // namespace ltlteach
