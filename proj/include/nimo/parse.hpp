#ifndef NIMO_PARSE_HPP
#define NIMO_PARSE_HPP

#include <cctype>
#include <string>

#include "expr.hpp"

namespace nimo {

// Recursive-descent parser for the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' int)?
//   base   := rational | 'x' | 'y' | 'r' | 'i' | 'hbar' | ident
//           | 'D[' ident ',' int ',' int ']' | '(' expr ')'
// where ident may carry an index suffix like A[3,0,1] or f[0,2], and
// rational is int or int/posint.
class Parser {
 public:
  explicit Parser(std::string src) : s_(std::move(src)) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw error("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Int parse_uint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    return Int(digits);
  }
  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    Int v = parse_uint();
    if (v > 1000000) fail("index too large");
    long out = v.convert_to<long>();
    return neg ? -out : out;
  }

  std::string parse_ident() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected identifier");
    std::string id;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      id += s_[pos_++];
    if (pos_ < s_.size() && s_[pos_] == '[' && id != "D") {
      id += s_[pos_++];
      while (true) {
        skip_ws();
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-'))
          id += s_[pos_++];
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          id += s_[pos_++];
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ']') {
          id += s_[pos_++];
          break;
        }
        fail("malformed index suffix in identifier");
      }
    }
    return id;
  }

  Expr parse_expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Expr acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * parse_factor();
    }
    return acc;
  }

  Expr parse_factor() {
    Expr b = parse_base();
    if (peek() == '^') {
      ++pos_;
      long e = parse_int();
      return expr_pow(b, e);
    }
    return b;
  }

  Expr parse_base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = parse_uint();
      if (peek() == '/') {
        ++pos_;
        Int d = parse_uint();
        if (d == 0) fail("zero denominator in rational literal");
        return Expr::rational(Rat(n, d));
      }
      return Expr::rational(Rat(n));
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = parse_ident();
      if (id == "x") return Expr::x();
      if (id == "y") return Expr::y();
      if (id == "r") return Expr::r();
      if (id == "i") return Expr::i_unit();
      if (id == "hbar") return Expr::hbar();
      if (id == "D") {
        if (!eat('[')) fail("expected '[' after D");
        std::string fid = parse_ident();
        if (!eat(',')) fail("expected ',' in jet");
        long dx = parse_int();
        if (!eat(',')) fail("expected ',' in jet");
        long dy = parse_int();
        if (!eat(']')) fail("expected ']' in jet");
        if (dx < 0 || dy < 0) fail("negative jet order");
        return Expr::jet(fid, static_cast<int>(dx), static_cast<int>(dy));
      }
      return Expr::param(id);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string s_;
  size_t pos_ = 0;
};

inline Expr parse_expr(const std::string& s) { return Parser(s).parse(); }

}  // namespace nimo

#endif
