#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nimo/expr.hpp"
#include "nimo/parse.hpp"
#include "nimo/print.hpp"

using namespace nimo;

namespace {

Expr X = Expr::x();
Expr Y = Expr::y();
Expr R = Expr::r();
Expr I = Expr::i_unit();

// deterministic random expression builder over x, y, r, a small param set and
// a couple of jets, with small rational coefficients
struct Rng {
  std::mt19937 g;
  explicit Rng(unsigned seed) : g(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
  Rat rat() {
    int n = uniform(-6, 6);
    int d = uniform(1, 4);
    return Rat(n, d);
  }
  Expr atom() {
    switch (uniform(0, 7)) {
      case 0: return Expr::x();
      case 1: return Expr::y();
      case 2: return Expr::r();
      case 3: return Expr::param("a");
      case 4: return Expr::param("omega");
      case 5: return Expr::jet("V", uniform(0, 2), uniform(0, 2));
      case 6: return Expr::i_unit();
      default: return Expr::rational(rat());
    }
  }
  Expr build(int depth) {
    if (depth == 0) return atom();
    switch (uniform(0, 3)) {
      case 0: return build(depth - 1) + build(depth - 1);
      case 1: return build(depth - 1) * build(depth - 1);
      case 2: return build(depth - 1) - build(depth - 1);
      default: {
        Expr d = build(depth - 1);
        if (d.is_zero()) return atom();
        return build(depth - 1) / d;
      }
    }
  }
};

// rational point with r^2 = x^2 + y^2 via a Pythagorean parametrization
std::function<GaussRat(VarId)> random_point(Rng& rng) {
  Rat m(rng.uniform(1, 9)), n(rng.uniform(10, 19)), s(rng.uniform(1, 5));
  Rat px = (n * n - m * m) / s, py = 2 * m * n / s, pr = (n * n + m * m) / s;
  auto vals = std::make_shared<std::map<VarId, GaussRat>>();
  (*vals)[var_x()] = GaussRat(px);
  (*vals)[var_y()] = GaussRat(py);
  (*vals)[var_r()] = GaussRat(pr);
  int seed = rng.uniform(0, 100000);
  return [vals, seed](VarId v) -> GaussRat {
    auto it = vals->find(v);
    if (it != vals->end()) return it->second;
    std::mt19937 g(seed + v * 7919);
    std::uniform_int_distribution<int> d(-12, 12), e(1, 3);
    Rat q(d(g), e(g));
    if (q == 0) q = 1;
    (*vals)[v] = GaussRat(q);
    return (*vals)[v];
  };
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  CHECK((X + (-X)).is_zero());
  CHECK(R * R == X * X + Y * Y);
  CHECK(I * I == Expr::integer(-1));
  CHECK((X + Y) * (X - Y) == X * X - Y * Y);
  CHECK(expr_pow(X + Y, 2) == X * X + Expr::integer(2) * X * Y + Y * Y);
  Expr half = Expr::rational(Rat(1, 2));
  CHECK(half + half == Expr::one());
  CHECK_THROWS_AS(Expr::one() / Expr::zero(), error);
  CHECK_THROWS_AS(expr_pow(Expr::zero(), -1), error);
}

TEST_CASE("radical reduction and rationalized denominators") {
  // 1/r has an r-free denominator after normalization
  Expr inv_r = Expr::one() / R;
  CHECK(inv_r == R / (X * X + Y * Y));
  CHECK(!inv_r.den_contains(var_r()));
}

TEST_CASE("is_zero decides canonical identities") {
  CHECK((R * R - X * X - Y * Y).is_zero());
  Expr e = expr_pow(X + Y, 2) - X * X - Expr::integer(2) * X * Y - Y * Y;
  CHECK(e.is_zero());
  // diff(x/r, x) = y^2/r^3 = y^2 r / (x^2+y^2)^2
  Expr lhs = diff_x(X / R);
  Expr rhs = Y * Y * R / expr_pow(X * X + Y * Y, 2);
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("differentiation") {
  CHECK(diff_x(X * X * Y) == Expr::integer(2) * X * Y);
  CHECK(diff_x(R) == X / R);
  CHECK(diff_y(R) == Y / R);
  CHECK(diff_y(Expr::jet("V", 1, 0)) == Expr::jet("V", 1, 1));
  // quotient rule with radicals: d/dy (y/r) = x^2/r^3
  CHECK(diff_y(Y / R) == X * X / (R * (X * X + Y * Y)));
}

TEST_CASE("Leibniz and commuting partials on random expressions") {
  Rng rng(20260809);
  for (int t = 0; t < 60; ++t) {
    Expr a = rng.build(2), b = rng.build(2);
    VarId v = rng.uniform(0, 1) ? var_x() : var_y();
    CHECK((diff(a * b, v) - diff(a, v) * b - a * diff(b, v)).is_zero());
    CHECK((diff_y(diff_x(a)) - diff_x(diff_y(a))).is_zero());
  }
}

TEST_CASE("canonical form soundness under reassociation") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    Expr a = rng.build(2), b = rng.build(2), c = rng.build(2);
    Expr lhs = (a + b) * c + a * c;
    Expr rhs = c * b + (c + c) * a;
    CHECK((lhs - rhs).is_zero());
    CHECK(((a * b) * c - a * (b * c)).is_zero());
    CHECK(((a + b) + c - (c + b + a)).is_zero());
  }
}

TEST_CASE("probabilistic zero cross-check") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    Expr e = rng.build(2);
    bool z = e.is_zero();
    int checked = 0;
    for (int p = 0; p < 20 && checked < (z ? 20 : 1); ++p) {
      auto pt = random_point(rng);
      try {
        GaussRat v = eval_point(e, pt);
        ++checked;
        if (z) {
          CHECK(v.is_zero());
        } else if (!v.is_zero()) {
          SUCCEED();
          break;
        }
      } catch (const error&) {
        continue;  // point on the denominator variety; pick another
      }
    }
  }
}

TEST_CASE("no r power of two survives in canonical parts") {
  Rng rng(12345);
  for (int t = 0; t < 60; ++t) {
    Expr e = rng.build(2);
    CHECK(e.num().degree(var_r()) <= 1);
    CHECK(e.den().degree(var_r()) == 0);
  }
}

TEST_CASE("substitute concrete functions into jets") {
  // substitute(Jet(V,0,1), {V -> x^2+y^2}) = 2y
  Expr j01 = Expr::jet("V", 0, 1);
  CHECK(substitute(j01, {{"V", X * X + Y * Y}}) == Expr::integer(2) * Y);
  // substitute(Jet(V,1,0), {V -> a/r}) = -a x / r^3
  Expr j10 = Expr::jet("V", 1, 0);
  Expr a = Expr::param("a");
  Expr got = substitute(j10, {{"V", a / R}});
  Expr want = -(a * X) / (R * (X * X + Y * Y));
  CHECK(got == want);
  // identity on empty bindings
  CHECK(substitute(X + Y, {}) == X + Y);
  // unbound jets stay symbolic
  CHECK(substitute(Expr::jet("W", 1, 0), {{"V", X}}) == Expr::jet("W", 1, 0));
  // recursive bindings rejected
  CHECK_THROWS_AS(substitute(j01, {{"V", Expr::jet("V", 0, 0) + X}}), error);
}

TEST_CASE("substitute_jets rewrites derivative cones") {
  // rule: dy f -> x, then dxdy f -> 1
  Expr dxy = Expr::jet("f", 1, 1);
  Expr got = substitute_jets(dxy, {{{"f", 0, 1}, X}});
  CHECK(got == Expr::one());
  CHECK(substitute_jets(Expr::jet("f", 2, 0), {{{"f", 0, 1}, X}}) == Expr::jet("f", 2, 0));
}

TEST_CASE("hbar utilities") {
  Expr hb = Expr::hbar();
  Expr e = X + hb * hb * Y;
  CHECK(hbar_degree(e) == 2);
  CHECK(even_in_hbar(e));
  CHECK(!even_in_hbar(X + hb * Y));
  CHECK(subst_params(e, {{"hbar", Expr::zero()}}) == X);
}

TEST_CASE("conjugation") {
  Expr e = X + I * Y;
  CHECK(e.conj() == X - I * Y);
  CHECK((e * e.conj()) == X * X + Y * Y);
  CHECK(!e.is_real());
  CHECK((X + Y).is_real());
  // division by i keeps denominators real
  Expr q = X / (X + I);
  CHECK(!q.den_contains(var_hbar()));
  CHECK(q.den().contains(var_x()));
}
