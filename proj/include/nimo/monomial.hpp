#ifndef NIMO_MONOMIAL_HPP
#define NIMO_MONOMIAL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "symbols.hpp"

namespace nimo {

// Sparse power product. Factors are kept sorted by variable significance
// (most significant first) with strictly positive exponents.
struct Monomial {
  std::vector<std::pair<VarId, int>> v;

  bool is_one() const { return v.empty(); }
  int total_degree() const {
    int d = 0;
    for (auto& p : v) d += p.second;
    return d;
  }
  int degree(VarId id) const {
    for (auto& p : v)
      if (p.first == id) return p.second;
    return 0;
  }
  bool contains(VarId id) const { return degree(id) > 0; }

  static Monomial one() { return {}; }
  static Monomial var(VarId id, int e = 1) {
    Monomial m;
    if (e != 0) m.v.push_back({id, e});
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.v.reserve(a.v.size() + b.v.size());
    size_t i = 0, j = 0;
    while (i < a.v.size() && j < b.v.size()) {
      if (a.v[i].first == b.v[j].first) {
        int e = a.v[i].second + b.v[j].second;
        if (e != 0) out.v.push_back({a.v[i].first, e});
        ++i, ++j;
      } else if (var_before(a.v[i].first, b.v[j].first)) {
        out.v.push_back(a.v[i]);
        ++i;
      } else {
        out.v.push_back(b.v[j]);
        ++j;
      }
    }
    for (; i < a.v.size(); ++i) out.v.push_back(a.v[i]);
    for (; j < b.v.size(); ++j) out.v.push_back(b.v[j]);
    return out;
  }

  // a / b if b divides a
  static std::optional<Monomial> div(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0;
    for (auto& [vb, eb] : b.v) {
      while (i < a.v.size() && var_before(a.v[i].first, vb)) out.v.push_back(a.v[i++]);
      if (i >= a.v.size() || a.v[i].first != vb || a.v[i].second < eb) return std::nullopt;
      if (a.v[i].second > eb) out.v.push_back({vb, a.v[i].second - eb});
      ++i;
    }
    for (; i < a.v.size(); ++i) out.v.push_back(a.v[i]);
    return out;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.v.size() && j < b.v.size()) {
      if (a.v[i].first == b.v[j].first) {
        out.v.push_back({a.v[i].first, std::min(a.v[i].second, b.v[j].second)});
        ++i, ++j;
      } else if (var_before(a.v[i].first, b.v[j].first)) {
        ++i;
      } else {
        ++j;
      }
    }
    return out;
  }

  Monomial without(VarId id) const {
    Monomial out;
    for (auto& p : v)
      if (p.first != id) out.v.push_back(p);
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.v == b.v; }
};

// graded lexicographic: higher total degree first, then lex on significance
inline int mono_cmp(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.v.size() && j < b.v.size()) {
    if (a.v[i].first == b.v[j].first) {
      if (a.v[i].second != b.v[j].second) {
        // same variable, larger exponent => lex-larger
        return a.v[i].second < b.v[j].second ? -1 : 1;
      }
      ++i, ++j;
    } else if (var_before(a.v[i].first, b.v[j].first)) {
      return 1;  // a has the more significant variable
    } else {
      return -1;
    }
  }
  if (i < a.v.size()) return 1;
  if (j < b.v.size()) return -1;
  return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b) { return mono_cmp(a, b) < 0; }

}  // namespace nimo

#endif
