#ifndef NIMO_EXPR_HPP
#define NIMO_EXPR_HPP

#include <functional>
#include <map>
#include <optional>

#include "polygcd.hpp"

namespace nimo {

// Exact scalar of the engine: element of the fraction field of
// Q(i)[x,y,params,jets][r] / (r^2 - x^2 - y^2).
//
// Canonical form: the denominator is r-free, i-free, integer-primitive with
// positive leading coefficient; the numerator has r-degree <= 1 per monomial;
// no real polynomial divides every component of the numerator and the
// denominator. Zero is {0, 1}. Equal values have identical representations,
// so equality is structural and is_zero is a null test on the numerator.
class Expr {
 public:
  Expr() : den_(Poly::constant(GaussRat(1))) {}

  static Expr from_polys(Poly num, Poly den) {
    Expr e;
    e.assign(std::move(num), std::move(den));
    return e;
  }

  static Expr zero() { return Expr(); }
  static Expr one() { return integer(1); }
  static Expr integer(long v) { return constant(GaussRat(Rat(v))); }
  static Expr rational(Rat q) { return constant(GaussRat(std::move(q))); }
  static Expr constant(GaussRat c) {
    Expr e;
    e.num_ = Poly::constant(std::move(c));
    return e;
  }
  static Expr i_unit() { return constant(GaussRat::i()); }
  static Expr x() { return variable(var_x()); }
  static Expr y() { return variable(var_y()); }
  static Expr r() { return variable(var_r()); }
  static Expr hbar() { return variable(var_hbar()); }
  static Expr param(const std::string& name) { return variable(var_param(name)); }
  static Expr jet(const std::string& fid, int dx, int dy) { return variable(var_jet(fid, dx, dy)); }
  static Expr variable(VarId v) {
    Expr e;
    e.num_ = Poly::var(v);
    return e;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == den_; }
  bool is_rational() const { return num_.is_constant() && den_.is_constant() && num_.constant_value().is_real(); }
  bool is_polynomial() const { return den_.is_constant(); }

  Rat rational_value() const {
    if (!is_rational()) throw error("expression is not a rational constant");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value().re / den_.constant_value().re;
  }

  friend Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return from_polys(poly_add(a.num_, b.num_), a.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    Poly bq = poly_div_exact(b.den_, g);
    Poly aq = poly_div_exact(a.den_, g);
    return from_polys(poly_add(poly_mul(a.num_, bq), poly_mul(b.num_, aq)), poly_mul(a.den_, bq));
  }
  friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
  Expr operator-() const {
    Expr e;
    e.num_ = poly_neg(num_);
    e.den_ = den_;
    return e;
  }
  friend Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_polys(poly_reduce_r(poly_mul(a.num_, b.num_)), poly_mul(a.den_, b.den_));
  }
  friend Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_zero()) throw error("division by zero expression");
    if (a.is_zero()) return zero();
    return from_polys(poly_reduce_r(poly_mul(a.num_, b.den_)), poly_reduce_r(poly_mul(a.den_, b.num_)));
  }
  friend bool operator==(const Expr& a, const Expr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  Expr conj() const {
    Expr e;
    e.num_ = poly_conj_i(num_);
    e.den_ = den_;  // denominator is i-free
    return e;
  }
  bool is_real() const { return poly_conj_i(num_) == num_; }

  int degree(VarId v) const { return num_.degree(v); }
  bool den_contains(VarId v) const { return den_.contains(v); }

 private:
  void assign(Poly n, Poly d) {
    n = poly_reduce_r(std::move(n));
    d = poly_reduce_r(std::move(d));
    if (d.is_zero()) throw error("division by zero expression");
    if (n.is_zero()) {
      num_ = Poly::zero();
      den_ = Poly::constant(GaussRat(1));
      return;
    }
    if (d.contains(var_r())) {
      Poly cr = poly_conj_r(d);
      n = poly_reduce_r(poly_mul(n, cr));
      d = poly_reduce_r(poly_mul(d, cr));
    }
    bool d_complex = false;
    for (auto& [m, c] : d.t)
      if (c.im != 0) {
        d_complex = true;
        break;
      }
    if (d_complex) {
      Poly ci = poly_conj_i(d);
      n = poly_mul(n, ci);
      d = poly_mul(d, ci);
    }
    if (!d.is_constant()) {
      // cancel common real r-free polynomial factors
      std::vector<Poly> comps = components(n);
      comps.push_back(d);
      Poly g = poly_gcd_list(comps);
      if (!g.is_constant()) {
        n = poly_div_exact(n, g);
        d = poly_div_exact(d, g);
      }
    }
    // scale: denominator integer-primitive, positive leading coefficient
    Rat c = poly_content_rat(d);
    const GaussRat& lc = d.lead().second;
    if (lc.re < 0) c = -c;
    n = poly_scale(n, GaussRat(Rat(1) / c));
    d = poly_scale(d, GaussRat(Rat(1) / c));
    num_ = std::move(n);
    den_ = std::move(d);
  }

  // real r-free component polynomials spanned by the basis {1, i, r, i r}
  static std::vector<Poly> components(const Poly& p) {
    Poly c[4];
    VarId r = var_r();
    for (auto& [m, co] : p.t) {
      bool hasr = m.contains(r);
      Monomial base = hasr ? m.without(r) : m;
      if (co.re != 0) c[hasr ? 2 : 0] = poly_add(c[hasr ? 2 : 0], Poly::term(base, GaussRat(co.re)));
      if (co.im != 0) c[hasr ? 3 : 1] = poly_add(c[hasr ? 3 : 1], Poly::term(base, GaussRat(co.im)));
    }
    std::vector<Poly> out;
    for (auto& p4 : c)
      if (!p4.is_zero()) out.push_back(std::move(p4));
    return out;
  }

  Poly num_, den_;
};

inline Expr expr_pow(const Expr& a, long n) {
  if (n == 0) return Expr::one();
  if (n < 0) {
    if (a.is_zero()) throw error("negative power of zero");
    return expr_pow(Expr::one() / a, -n);
  }
  Expr base = a, out = Expr::one();
  while (n > 0) {
    if (n & 1) out = out * base;
    base = (n >>= 1) ? base * base : base;
  }
  return out;
}

namespace detail {

// derivative of a polynomial: polynomial part plus R-part, where the full
// derivative is part + R * wrt_var / (x^2 + y^2) with R carrying the r-chain
// contributions (d r = wrt * r / (x^2+y^2))
struct PolyDiff {
  Poly part;
  Poly rpart;  // multiplied by wrtvar*r/(x^2+y^2) conceptually; stored as c*m'(with r)
};

inline PolyDiff poly_diff(const Poly& p, VarId wrt) {
  PolyDiff out;
  const SymTab& st = SymTab::instance();
  for (auto& [m, c] : p.t) {
    for (auto& [v, e] : m.v) {
      const VarData& vd = st.data(v);
      GaussRat ce = c * GaussRat(Rat(e));
      if (v == wrt) {
        Monomial mm = m * Monomial::var(v, -1);
        out.part = poly_add(out.part, Poly::term(mm, ce));
      } else if (vd.kind == VarKind::R) {
        // d(r)/dwrt = wrt * r / (x^2+y^2); r-exponent here is 1
        out.rpart = poly_add(out.rpart, Poly::term(m * Monomial::var(wrt), ce));
      } else if (vd.kind == VarKind::Jet) {
        int dx = vd.dx + (wrt == var_x() ? 1 : 0);
        int dy = vd.dy + (wrt == var_y() ? 1 : 0);
        Monomial mm = (m * Monomial::var(v, -1)) * Monomial::var(var_jet(vd.name, dx, dy));
        out.part = poly_add(out.part, Poly::term(mm, ce));
      }
      // params and the other coordinate differentiate to zero
    }
  }
  return out;
}

}  // namespace detail

inline Expr diff(const Expr& e, VarId wrt) {
  if (wrt != var_x() && wrt != var_y()) throw error("diff: variable must be x or y");
  detail::PolyDiff dn = detail::poly_diff(e.num(), wrt);
  detail::PolyDiff dd = detail::poly_diff(e.den(), wrt);
  if (!dd.rpart.is_zero()) throw error("internal: denominator contains r");
  Poly s = poly_add(Poly::var(var_x(), 2), Poly::var(var_y(), 2));
  // d(N/D) = (dN D - N dD) / D^2, dN = dn.part + dn.rpart/s
  Poly lhs = poly_mul(poly_add(poly_mul(dn.part, s), dn.rpart), e.den());
  Poly rhs = poly_mul(poly_mul(e.num(), dd.part), s);
  return Expr::from_polys(poly_sub(lhs, rhs), poly_mul(poly_mul(e.den(), e.den()), s));
}

inline Expr diff_x(const Expr& e) { return diff(e, var_x()); }
inline Expr diff_y(const Expr& e) { return diff(e, var_y()); }
inline Expr diff_xy(const Expr& e, int nx, int ny) {
  Expr out = e;
  for (int k = 0; k < nx; ++k) out = diff_x(out);
  for (int k = 0; k < ny; ++k) out = diff_y(out);
  return out;
}

// Evaluate with a partial valuation of generators; unmapped generators stay.
inline Expr eval_expr(const Expr& e, const std::function<std::optional<Expr>(VarId)>& f) {
  auto eval_poly = [&](const Poly& p) {
    Expr acc = Expr::zero();
    std::map<std::pair<VarId, int>, Expr> powcache;
    for (auto& [m, c] : p.t) {
      Expr term = Expr::constant(c);
      for (auto& [v, e2] : m.v) {
        auto it = powcache.find({v, e2});
        if (it == powcache.end()) {
          std::optional<Expr> sub = f(v);
          Expr base = sub ? *sub : Expr::variable(v);
          it = powcache.emplace(std::make_pair(v, e2), expr_pow(base, e2)).first;
        }
        term = term * it->second;
      }
      acc = acc + term;
    }
    return acc;
  };
  Expr n = eval_poly(e.num());
  Expr d = eval_poly(e.den());
  return n / d;
}

// substitute(e, {fid -> expr}): every Jet(fid,a,b) becomes diff_x^a diff_y^b
// of the binding. Simultaneous, one pass; bindings must not contain jets of
// the function they bind.
inline Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings) {
  for (auto& [fid, val] : bindings) {
    for (auto& [m, c] : val.num().t)
      for (auto& [v, ex] : m.v) {
        const VarData& vd = SymTab::instance().data(v);
        if (vd.kind == VarKind::Jet && vd.name == fid)
          throw error("recursive binding for function " + fid);
      }
  }
  std::map<VarId, Expr> cache;
  return eval_expr(e, [&](VarId v) -> std::optional<Expr> {
    const VarData& vd = SymTab::instance().data(v);
    if (vd.kind != VarKind::Jet) return std::nullopt;
    auto it = bindings.find(vd.name);
    if (it == bindings.end()) return std::nullopt;
    auto hit = cache.find(v);
    if (hit != cache.end()) return hit->second;
    Expr val = diff_xy(it->second, vd.dx, vd.dy);
    cache.emplace(v, val);
    return val;
  });
}

// jet-level rewrite: a rule ((fid,a0,b0) -> rhs) sends Jet(fid,a,b) with
// a>=a0, b>=b0 to diff_x^(a-a0) diff_y^(b-b0) rhs. Rules must not overlap.
inline Expr substitute_jets(const Expr& e,
                            const std::map<std::tuple<std::string, int, int>, Expr>& rules) {
  return eval_expr(e, [&](VarId v) -> std::optional<Expr> {
    const VarData& vd = SymTab::instance().data(v);
    if (vd.kind != VarKind::Jet) return std::nullopt;
    for (auto& [key, rhs] : rules) {
      auto& [fid, a0, b0] = key;
      if (vd.name == fid && vd.dx >= a0 && vd.dy >= b0)
        return diff_xy(rhs, vd.dx - a0, vd.dy - b0);
    }
    return std::nullopt;
  });
}

inline Expr subst_params(const Expr& e, const std::map<std::string, Expr>& vals) {
  return eval_expr(e, [&](VarId v) -> std::optional<Expr> {
    const VarData& vd = SymTab::instance().data(v);
    if (vd.kind != VarKind::Param) return std::nullopt;
    auto it = vals.find(vd.name);
    if (it == vals.end()) return std::nullopt;
    return it->second;
  });
}

inline int hbar_degree(const Expr& e) {
  if (e.den_contains(var_hbar())) throw error("hbar_degree: denominator contains hbar");
  return e.is_zero() ? -1 : e.num().degree(var_hbar());
}

inline bool even_in_hbar(const Expr& e) {
  return subst_params(e, {{"hbar", -Expr::hbar()}}) == e;
}

// exact point evaluation; throws if the denominator vanishes at the point
inline GaussRat eval_point(const Expr& e, const std::function<GaussRat(VarId)>& point) {
  auto eval_poly = [&](const Poly& p) {
    GaussRat acc(0);
    for (auto& [m, c] : p.t) {
      GaussRat t = c;
      for (auto& [v, ex] : m.v) {
        GaussRat b = point(v);
        for (int k = 0; k < ex; ++k) t = t * b;
      }
      acc += t;
    }
    return acc;
  };
  GaussRat d = eval_poly(e.den());
  if (d.is_zero()) throw error("eval_point: denominator vanishes at the point");
  return eval_poly(e.num()) / d;
}

}  // namespace nimo

#endif
