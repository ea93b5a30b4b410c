#include "ltlteach/ordinal.hpp"

namespace ltlteach {

Ordinal ordinal_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  Ordinal out;
  uint32_t lead = b.terms.front().first;
  // Terms of a with exponent below b's leading exponent are absorbed.
  for (const auto& t : a.terms) {
    if (t.first > lead) {
      out.terms.push_back(t);
    } else if (t.first == lead) {
      out.terms.push_back({lead, t.second + b.terms.front().second});
      out.terms.insert(out.terms.end(), b.terms.begin() + 1, b.terms.end());
      return out;
    } else {
      break;
    }
  }
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

int ordinal_cmp(const Ordinal& a, const Ordinal& b) {
  for (size_t i = 0; i < a.terms.size() && i < b.terms.size(); ++i) {
    if (a.terms[i].first != b.terms[i].first)
      return a.terms[i].first < b.terms[i].first ? -1 : 1;
    if (a.terms[i].second != b.terms[i].second)
      return a.terms[i].second < b.terms[i].second ? -1 : 1;
  }
  if (a.terms.size() != b.terms.size())
    return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

Ordinal times_omega(const Ordinal& a) {
  if (a.is_zero()) return a;
  Ordinal out;
  out.terms.push_back({a.terms.front().first + 1, 1});
  return out;
}

std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms) {
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(c);
    } else {
      out += e == 1 ? "w" : "w^" + std::to_string(e);
      if (c != 1) out += "*" + std::to_string(c);
    }
  }
  return out;
}

}  // namespace ltlteach
