#ifndef NIMO_NUMERIC_HPP
#define NIMO_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nimo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// gcd on Q: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); gcd(q,0)=|q|
inline Rat gcd_rat(const Rat& a, const Rat& b) {
  if (a == 0) return b < 0 ? Rat(-b) : b;
  if (b == 0) return a < 0 ? Rat(-a) : a;
  return Rat(gcd_int(num(a), num(b)), lcm_int(den(a), den(b)));
}

inline Int binomial(long n, long k) {
  // out-of-range arguments give 0 so index sums need no clipping
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// Element of Q(i).
struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(int n) : re(n) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRat conj() const { return {re, -im}; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw error("division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  static GaussRat i() { return {Rat(0), Rat(1)}; }
};

inline std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace nimo

#endif
