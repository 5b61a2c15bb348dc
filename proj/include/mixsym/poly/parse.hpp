#pragma once

#include <mixsym/poly/poly.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mixsym::poly {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Recursive descent over
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' ['-'] digits)?
///   atom   := digits ('/' digits)? | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, VarTablePtr vars) : s_(text), vars_(std::move(vars)) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + why + " in \"" +
                     std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }
  Poly term() {
    Poly p = unary();
    while (eat('*')) p *= unary();
    return p;
  }
  Poly unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Poly power() {
    skip();
    const bool is_x = pos_ < s_.size() && s_[pos_] == 'x' &&
                      (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])));
    Poly base = atom();
    if (!eat('^')) return base;
    const bool negative = eat('-');
    const int e = std::stoi(digits());
    if (negative) {
      if (!is_x) fail("negative exponent allowed only on x");
      return Poly::variable(vars_, 0, -e);
    }
    return base.pow(static_cast<unsigned>(e));
  }
  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (eat('/')) lit += "/" + digits();
      try {
        return Poly(vars_, exact::parse_rational(lit));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const bool shape_ok = name == "x" || ((name[0] == 'y' || name[0] == 'z') && name.size() > 1 &&
                                            name.find_first_not_of("0123456789", 1) == std::string::npos);
      if (!shape_ok) fail("bad variable name '" + name + "'");
      if (!vars_->has(name)) fail("variable '" + name + "' not in chart");
      return Poly::variable(vars_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text like "x*z1 - 2*z0" or "1/6*x^2*y0"; juxtaposition is rejected.
inline Poly parse_poly(std::string_view text, const VarTablePtr& vars) {
  return detail::Parser(text, vars).parse();
}

}  // namespace mixsym::poly
