#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nimo/parse.hpp"
#include "nimo/print.hpp"

using namespace nimo;

TEST_CASE("grammar basics") {
  CHECK(parse_expr("x+y") == Expr::x() + Expr::y());
  CHECK(parse_expr("3/2*x^2") == Expr::rational(Rat(3, 2)) * Expr::x() * Expr::x());
  CHECK(parse_expr("r^2") == Expr::x() * Expr::x() + Expr::y() * Expr::y());
  CHECK(parse_expr("i^2") == Expr::integer(-1));
  CHECK(parse_expr("D[V,1,0]") == Expr::jet("V", 1, 0));
  CHECK(parse_expr("D[f[0,2],0,1]") == Expr::jet("f[0,2]", 0, 1));
  CHECK(parse_expr("A[3,0,0]*hbar") == Expr::param("A[3,0,0]") * Expr::hbar());
  CHECK(parse_expr("(x+y)^-1") == Expr::one() / (Expr::x() + Expr::y()));
  CHECK(parse_expr("-x + y") == Expr::y() - Expr::x());
  CHECK(parse_expr("alpha1*omega") == Expr::param("alpha1") * Expr::param("omega"));
}

TEST_CASE("parse errors carry location") {
  CHECK_THROWS_AS(parse_expr("x+"), error);
  CHECK_THROWS_AS(parse_expr("x y"), error);
  CHECK_THROWS_AS(parse_expr("D[V,1]"), error);
  CHECK_THROWS_AS(parse_expr("(x"), error);
  CHECK_THROWS_AS(parse_expr("x/y"), error);  // division only via ^-1
  CHECK_THROWS_AS(parse_expr("1/0"), error);
}

TEST_CASE("print/parse round trip on randomized expressions") {
  std::mt19937 g(424242);
  auto u = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  std::function<Expr(int)> build = [&](int depth) -> Expr {
    if (depth == 0) {
      switch (u(0, 7)) {
        case 0: return Expr::x();
        case 1: return Expr::y();
        case 2: return Expr::r();
        case 3: return Expr::i_unit();
        case 4: return Expr::hbar();
        case 5: return Expr::jet("f[1,2]", u(0, 2), u(0, 2));
        case 6: return Expr::param("alpha2");
        default: return Expr::rational(Rat(u(-9, 9), u(1, 5)));
      }
    }
    Expr a = build(depth - 1), b = build(depth - 1);
    switch (u(0, 3)) {
      case 0: return a + b;
      case 1: return a - b;
      case 2: return a * b;
      default: return b.is_zero() ? a : a / b;
    }
  };
  for (int t = 0; t < 120; ++t) {
    Expr e = build(u(1, 3));
    std::string s = to_string(e);
    Expr back = parse_expr(s);
    INFO("printed: " << s);
    CHECK(back == e);
  }
}

TEST_CASE("printing is canonical and deterministic") {
  Expr e1 = (Expr::x() + Expr::y()) * (Expr::x() - Expr::y());
  Expr e2 = Expr::x() * Expr::x() - Expr::y() * Expr::y();
  CHECK(to_string(e1) == to_string(e2));
  CHECK(to_string(Expr::zero()) == "0");
  CHECK(to_string(-Expr::x()) == "-x");
}

TEST_CASE("latex output sanity") {
  Expr e = Expr::rational(Rat(3, 2)) * Expr::param("alpha1") + Expr::hbar() * Expr::hbar() * Expr::param("A[4,0,0]");
  std::string t = to_latex(e);
  CHECK(t.find("\\alpha_{1}") != std::string::npos);
  CHECK(t.find("\\hbar^{2}") != std::string::npos);
  CHECK(to_latex(Expr::jet("V", 2, 1)).find("\\partial_x^{2}") != std::string::npos);
}
