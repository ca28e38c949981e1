#ifndef NIMO_POLY_HPP
#define NIMO_POLY_HPP

#include <map>
#include <vector>

#include "monomial.hpp"

namespace nimo {

// Sparse multivariate polynomial over Q(i), terms in descending monomial
// order with nonzero coefficients.
struct Poly {
  std::vector<std::pair<Monomial, GaussRat>> t;

  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_one()); }
  GaussRat constant_value() const {
    if (t.empty()) return GaussRat(0);
    return t[0].second;
  }

  static Poly zero() { return {}; }
  static Poly constant(GaussRat c) {
    Poly p;
    if (!c.is_zero()) p.t.push_back({Monomial::one(), std::move(c)});
    return p;
  }
  static Poly var(VarId id, int e = 1) {
    Poly p;
    p.t.push_back({Monomial::var(id, e), GaussRat(1)});
    return p;
  }
  static Poly term(Monomial m, GaussRat c) {
    Poly p;
    if (!c.is_zero()) p.t.push_back({std::move(m), std::move(c)});
    return p;
  }

  const std::pair<Monomial, GaussRat>& lead() const { return t.front(); }

  int total_degree() const {
    int d = 0;
    for (auto& [m, c] : t) d = std::max(d, m.total_degree());
    return d;
  }
  int degree(VarId v) const {
    int d = 0;
    for (auto& [m, c] : t) d = std::max(d, m.degree(v));
    return d;
  }
  bool contains(VarId v) const {
    for (auto& [m, c] : t)
      if (m.contains(v)) return true;
    return false;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a.t == b.t); }
};

inline Poly poly_neg(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.t) c = -c;
  return out;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = mono_cmp(a.t[i].first, b.t[j].first);
    if (c == 0) {
      GaussRat s = a.t[i].second + b.t[j].second;
      if (!s.is_zero()) out.t.push_back({a.t[i].first, std::move(s)});
      ++i, ++j;
    } else if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else {
      out.t.push_back(b.t[j++]);
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
  return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_mul_term(const Poly& a, const Monomial& m, const GaussRat& c) {
  Poly out;
  if (c.is_zero()) return out;
  out.t.reserve(a.t.size());
  for (auto& [ma, ca] : a.t) {
    GaussRat cc = ca * c;
    if (!cc.is_zero()) out.t.push_back({ma * m, std::move(cc)});
  }
  return out;  // grlex is multiplicative, order is preserved
}

inline Poly poly_scale(const Poly& a, const GaussRat& c) {
  Poly out;
  if (c.is_zero()) return out;
  out.t = a.t;
  for (auto& [m, cc] : out.t) cc = cc * c;
  return out;
}

struct MonoCmpDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  if (b.is_constant()) return poly_scale(a, b.constant_value());
  if (a.is_constant()) return poly_scale(b, a.constant_value());
  std::map<Monomial, GaussRat, MonoCmpDesc> acc;
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t) {
      GaussRat c = ca * cb;
      auto [it, fresh] = acc.emplace(ma * mb, c);
      if (!fresh) it->second += c;
    }
  Poly out;
  out.t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.t.push_back({m, c});
  return out;
}

// rewrite r^k for k>=2 using r^2 = x^2 + y^2
inline Poly poly_reduce_r(const Poly& p) {
  VarId r = var_r();
  bool needs = false;
  for (auto& [m, c] : p.t)
    if (m.degree(r) >= 2) {
      needs = true;
      break;
    }
  if (!needs) return p;
  Poly x2y2 = poly_add(Poly::var(var_x(), 2), Poly::var(var_y(), 2));
  Poly out;
  for (auto& [m, c] : p.t) {
    int e = m.degree(r);
    if (e < 2) {
      out = poly_add(out, Poly::term(m, c));
      continue;
    }
    Monomial base = m.without(r);
    if (e % 2) base = base * Monomial::var(r, 1);
    Poly piece = Poly::term(base, c);
    for (int q = 0; q < e / 2; ++q) piece = poly_mul(piece, x2y2);
    out = poly_add(out, piece);
  }
  return out;  // r-degree of every term is now 0 or 1
}

inline Poly poly_conj_i(const Poly& p) {
  Poly out = p;
  for (auto& [m, c] : out.t) c = c.conj();
  return out;
}

inline Poly poly_conj_r(const Poly& p) {
  Poly out = p;
  for (auto& [m, c] : out.t)
    if (m.degree(var_r()) % 2 == 1) c = -c;
  return out;
}

// positive rational content: gcd of all re/im components (0 for zero poly)
inline Rat poly_content_rat(const Poly& p) {
  Rat g = 0;
  for (auto& [m, c] : p.t) {
    g = gcd_rat(g, c.re);
    g = gcd_rat(g, c.im);
  }
  return g;
}

}  // namespace nimo

#endif
