#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hodge/errors.hpp"
#include "hodge/rational.hpp"

namespace hodge::detail {

// Recursive-descent parser for  + - * ^ ( )  over integer/rational literals and
// identifiers. `Ctx` supplies:
//   T constant(const Rational&)
//   T identifier(std::string_view)          (throws ParseError if unknown)
//   T multiply(const T&, const T&)
// T itself must support +, - (binary and unary).
template <class T, class Ctx>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ctx& ctx) : s_(text), ctx_(ctx) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    skip_ws();
    T acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = unary();
    while (accept('*')) acc = ctx_.multiply(acc, unary());
    return acc;
  }

  T unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected nonnegative integer exponent");
      if (pos_ - start > 6) fail("exponent too large");
      unsigned k = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      T r = ctx_.constant(Rational(1));
      T b = base;
      while (k) {
        if (k & 1u) r = ctx_.multiply(r, b);
        k >>= 1u;
        if (k) b = ctx_.multiply(b, b);
      }
      return r;
    }
    return base;
  }

  T primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("expected denominator");
        std::size_t at = pos_;
        Integer den(read_digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return ctx_.constant(q);
      }
      return ctx_.constant(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      std::size_t save = pos_;
      pos_ = start;
      T v = ctx_.identifier(id, start);
      pos_ = save;
      return v;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Ctx& ctx_;
};

}  // namespace hodge::detail
