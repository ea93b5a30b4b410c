#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ltlteach {

// Ordinals below w^w in Cantor normal form: sum of w^e * c terms with
// strictly decreasing exponents and positive coefficients. Empty list = 0.
struct Ordinal {
  std::vector<std::pair<uint32_t, uint64_t>> terms;

  static Ordinal zero() { return {}; }
  static Ordinal finite(uint64_t n) {
    Ordinal o;
    if (n) o.terms.push_back({0, n});
    return o;
  }
  static Ordinal omega() {
    Ordinal o;
    o.terms.push_back({1, 1});
    return o;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const {
    return terms.empty() || (terms.size() == 1 && terms[0].first == 0);
  }
};

Ordinal ordinal_add(const Ordinal& a, const Ordinal& b);
int ordinal_cmp(const Ordinal& a, const Ordinal& b);  // -1 / 0 / 1
Ordinal times_omega(const Ordinal& a);                // a * w
std::string print_ordinal(const Ordinal& a);          // e.g. "w^2*3+w+5"

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.terms == b.terms;
}

}  // namespace ltlteach
