#ifndef NIMO_POLYGCD_HPP
#define NIMO_POLYGCD_HPP

#include <set>

#include "poly.hpp"

namespace nimo {

// Exact multivariate division; nullopt if b does not divide a.
inline std::optional<Poly> poly_try_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (b.is_constant()) return poly_scale(a, GaussRat(1) / b.constant_value());
  Poly rem = a;
  Poly quot;
  const auto& [lm, lc] = b.lead();
  while (!rem.is_zero()) {
    auto q = Monomial::div(rem.lead().first, lm);
    if (!q) return std::nullopt;
    GaussRat qc = rem.lead().second / lc;
    quot = poly_add(quot, Poly::term(*q, qc));
    rem = poly_sub(rem, poly_mul_term(b, *q, qc));
  }
  return quot;
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto q = poly_try_div(a, b);
  if (!q) throw error("inexact polynomial division");
  return *q;
}

// --- univariate view over a main variable -----------------------------------

inline std::vector<Poly> poly_to_uni(const Poly& p, VarId v) {
  std::vector<Poly> c(static_cast<size_t>(p.degree(v)) + 1);
  for (auto& [m, coef] : p.t) {
    int e = m.degree(v);
    c[e] = poly_add(c[e], Poly::term(m.without(v), coef));
  }
  return c;
}

inline Poly poly_from_uni(const std::vector<Poly>& c, VarId v) {
  Poly out;
  for (size_t e = 0; e < c.size(); ++e)
    out = poly_add(out, poly_mul(c[e], Poly::var(v, static_cast<int>(e))));
  return out;
}

inline int uni_deg(const std::vector<Poly>& c) {
  for (int e = static_cast<int>(c.size()) - 1; e >= 0; --e)
    if (!c[e].is_zero()) return e;
  return -1;
}

inline Poly poly_gcd(const Poly& A, const Poly& B);

inline Poly poly_gcd_list(const std::vector<Poly>& ps) {
  Poly g;
  for (auto& p : ps) {
    g = poly_gcd(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// sign convention: leading coefficient (grlex) has positive real part, or
// positive imaginary part when the real part vanishes
inline Poly poly_normalize_sign(const Poly& p) {
  if (p.is_zero()) return p;
  const GaussRat& lc = p.lead().second;
  bool neg = lc.re != 0 ? lc.re < 0 : lc.im < 0;
  return neg ? poly_neg(p) : p;
}

namespace detail {

// pseudo-remainder of A by B in variable v: lc(B)^(degA-degB+1) A = Q B + R
inline std::vector<Poly> pseudo_rem(std::vector<Poly> A, const std::vector<Poly>& B, int degB) {
  int degA = uni_deg(A);
  const Poly& lb = B[degB];
  int e = degA - degB + 1;
  while (degA >= degB && degA >= 0) {
    Poly la = A[degA];
    A[degA] = Poly::zero();
    for (int k = 0; k < degA; ++k) A[k] = poly_mul(A[k], lb);
    for (int k = 0; k < degB; ++k)
      A[k + degA - degB] = poly_sub(A[k + degA - degB], poly_mul(la, B[k]));
    --e;
    degA = uni_deg(A);
  }
  // make up skipped factors so the total multiplier is lb^(delta+1)
  for (; e > 0; --e)
    for (auto& p : A) p = poly_mul(p, lb);
  A.resize(static_cast<size_t>(degA + 1 > 0 ? degA + 1 : 0));
  return A;
}

inline Poly content_uni(const std::vector<Poly>& c) { return poly_gcd_list(c); }

}  // namespace detail

// GCD over Q[vars] via primitive subresultant PRS; result sign-normalized,
// content included (so integer-coefficient inputs give the full Z-gcd up to
// the rational scale of the inputs).
inline Poly poly_gcd(const Poly& A, const Poly& B) {
  if (A.is_zero()) return poly_normalize_sign(B);
  if (B.is_zero()) return poly_normalize_sign(A);
  if (A.is_constant() || B.is_constant()) {
    Rat c = gcd_rat(poly_content_rat(A), poly_content_rat(B));
    return Poly::constant(GaussRat(c));
  }
  // pick the present variable minimizing the larger degree (deterministic)
  std::set<VarId> vars;
  for (auto& [m, c] : A.t)
    for (auto& [vv, e] : m.v) vars.insert(vv);
  std::set<VarId> varsB;
  for (auto& [m, c] : B.t)
    for (auto& [vv, e] : m.v) varsB.insert(vv);
  VarId best = 0;
  long best_score = -1;
  for (VarId v : vars) {
    if (!varsB.count(v)) continue;
    long score = std::max(A.degree(v), B.degree(v));
    if (best_score < 0 || score < best_score || (score == best_score && var_before(v, best))) {
      best = v;
      best_score = score;
    }
  }
  if (best_score < 0) {
    // no common variable: gcd is the gcd of contents
    Rat c = gcd_rat(poly_content_rat(A), poly_content_rat(B));
    return Poly::constant(GaussRat(c));
  }
  VarId v = best;

  std::vector<Poly> ua = poly_to_uni(A, v);
  std::vector<Poly> ub = poly_to_uni(B, v);
  Poly contA = detail::content_uni(ua);
  Poly contB = detail::content_uni(ub);
  Poly cont = poly_gcd(contA, contB);
  for (auto& p : ua) p = poly_div_exact(p, contA);
  for (auto& p : ub) p = poly_div_exact(p, contB);

  if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);

  Poly g = Poly::constant(GaussRat(1));
  Poly h = Poly::constant(GaussRat(1));
  while (true) {
    int da = uni_deg(ua), db = uni_deg(ub);
    int delta = da - db;
    std::vector<Poly> R = detail::pseudo_rem(ua, ub, db);
    if (uni_deg(R) < 0) break;
    if (uni_deg(R) == 0) {
      // primitive parts coprime in v
      return poly_normalize_sign(cont);
    }
    ua = ub;
    Poly divisor = poly_mul(g, [&] {
      Poly hh = Poly::constant(GaussRat(1));
      for (int k = 0; k < delta; ++k) hh = poly_mul(hh, h);
      return hh;
    }());
    ub = R;
    for (auto& p : ub) p = poly_div_exact(p, divisor);
    g = ua[uni_deg(ua)];
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Poly gn = Poly::constant(GaussRat(1));
      for (int k = 0; k < delta; ++k) gn = poly_mul(gn, g);
      Poly hd = Poly::constant(GaussRat(1));
      for (int k = 0; k < delta - 1; ++k) hd = poly_mul(hd, h);
      h = poly_div_exact(gn, hd);
    }
  }
  // primitive part of the last nonzero remainder (in ub)
  Poly cb = detail::content_uni(ub);
  for (auto& p : ub) p = poly_div_exact(p, cb);
  Poly res = poly_mul(cont, poly_from_uni(ub, v));
  return poly_normalize_sign(res);
}

}  // namespace nimo

#endif
