#ifndef NIMO_PRINT_HPP
#define NIMO_PRINT_HPP

#include <sstream>
#include <string>

#include "expr.hpp"

namespace nimo {

namespace detail {

inline void print_rat_abs(std::ostringstream& os, const Rat& q, bool force) {
  Rat a = q < 0 ? Rat(-q) : q;
  if (a == 1 && !force) return;
  os << a;
}

// one printed product: |coeff| * factors; returns false if nothing printed
inline std::string term_string(const Rat& coeff, bool with_i, const Monomial& m) {
  std::ostringstream os;
  bool have = false;
  Rat a = coeff < 0 ? Rat(-coeff) : coeff;
  if (a != 1 || (!with_i && m.is_one())) {
    os << a;
    have = true;
  }
  if (with_i) {
    if (have) os << "*";
    os << "i";
    have = true;
  }
  for (auto& [v, e] : m.v) {
    if (have) os << "*";
    os << var_name(v);
    if (e != 1) os << "^" << e;
    have = true;
  }
  return os.str();
}

inline std::string poly_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p.t) {
    if (c.re != 0) {
      bool neg = c.re < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      os << term_string(c.re, false, m);
      first = false;
    }
    if (c.im != 0) {
      bool neg = c.im < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      os << term_string(c.im, true, m);
      first = false;
    }
  }
  return os.str();
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
  if (e.is_polynomial()) {
    if (e.den().constant_value() == GaussRat(1)) return detail::poly_string(e.num());
    // canonical form keeps integer-primitive denominators, so a constant
    // denominator is exactly 1; guard anyway
  }
  return "(" + detail::poly_string(e.num()) + ")*(" + detail::poly_string(e.den()) + ")^-1";
}

// ---------------------------------------------------------------------------
// LaTeX

namespace detail {

inline std::string latex_name(VarId v) {
  const VarData& d = SymTab::instance().data(v);
  auto texname = [](const std::string& n) -> std::string {
    static const char* greek[] = {"alpha", "beta", "gamma", "delta", "epsilon", "lambda",
                                  "mu",    "nu",   "omega", "sigma", "tau",     "theta"};
    for (const char* g : greek) {
      if (n == g) return "\\" + n;
      if (n.rfind(g, 0) == 0 && n.size() > std::string(g).size()) {
        std::string suffix = n.substr(std::string(g).size());
        bool digits = !suffix.empty();
        for (char ch : suffix) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
        if (digits) return "\\" + std::string(g) + "_{" + suffix + "}";
      }
    }
    auto lb = n.find('[');
    if (lb != std::string::npos && n.back() == ']') {
      std::string head = n.substr(0, lb);
      std::string idx = n.substr(lb + 1, n.size() - lb - 2);
      return head + "_{" + idx + "}";
    }
    if (n == "hbar") return "\\hbar";
    return n;
  };
  switch (d.kind) {
    case VarKind::X: return "x";
    case VarKind::Y: return "y";
    case VarKind::R: return "r";
    case VarKind::Param: return texname(d.name);
    case VarKind::Jet: {
      std::string f = texname(d.name);
      if (d.dx == 0 && d.dy == 0) return f;
      std::string out;
      if (d.dx == 1)
        out += "\\partial_x ";
      else if (d.dx > 1)
        out += "\\partial_x^{" + std::to_string(d.dx) + "} ";
      if (d.dy == 1)
        out += "\\partial_y ";
      else if (d.dy > 1)
        out += "\\partial_y^{" + std::to_string(d.dy) + "} ";
      return out + f;
    }
  }
  return "?";
}

inline std::string latex_term(const Rat& coeff, bool with_i, const Monomial& m) {
  std::ostringstream os;
  Rat a = coeff < 0 ? Rat(-coeff) : coeff;
  bool have = false;
  if (a != 1 || (m.is_one() && !with_i)) {
    if (den(a) == 1) {
      os << num(a);
    } else {
      os << "\\tfrac{" << num(a) << "}{" << den(a) << "}";
    }
    have = true;
  }
  if (with_i) {
    os << (have ? " " : "") << "i";
    have = true;
  }
  for (auto& [v, e] : m.v) {
    if (have) os << " ";
    std::string nm = latex_name(v);
    bool composite = nm.find(' ') != std::string::npos && e != 1;
    if (composite) os << "\\left(" << nm << "\\right)";
    else os << nm;
    if (e != 1) os << "^{" << e << "}";
    have = true;
  }
  return os.str();
}

inline std::string latex_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& c, bool wi, const Monomial& m) {
    bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? "-" : "+");
    os << latex_term(c, wi, m);
    first = false;
  };
  for (auto& [m, c] : p.t) {
    if (c.re != 0) emit(c.re, false, m);
    if (c.im != 0) emit(c.im, true, m);
  }
  return os.str();
}

}  // namespace detail

// hbar^2-graded layout: hbar-free part first, then grouped corrections
inline std::string to_latex(const Expr& e) {
  if (!e.is_polynomial())
    return "\\frac{" + detail::latex_poly(e.num()) + "}{" + detail::latex_poly(e.den()) + "}";
  VarId hb = var_hbar();
  if (!e.num().contains(hb)) return detail::latex_poly(e.num());
  int dmax = e.num().degree(hb);
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= dmax; ++d) {
    Poly part;
    for (auto& [m, c] : e.num().t)
      if (m.degree(hb) == d) part = poly_add(part, Poly::term(m.without(hb), c));
    if (part.is_zero()) continue;
    std::string body = detail::latex_poly(part);
    if (!first) os << "+";
    if (d == 0) {
      os << body;
    } else {
      os << "\\hbar" << (d > 1 ? "^{" + std::to_string(d) + "}" : "") << "\\left(" << body
         << "\\right)";
    }
    first = false;
  }
  return os.str();
}

}  // namespace nimo

#endif
