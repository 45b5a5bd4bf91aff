#include "quartic/parser.hpp"

#include <cctype>
#include <string>

namespace quartic {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BivarPoly parse() {
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    BivarPoly p = expr();
    skip();
    if (!at_end()) throw ParseError(unexpected(), pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string unexpected() const {
    if (at_end()) return "unexpected end of input";
    return std::string("unexpected character '") + peek() + "'";
  }

  BivarPoly expr() {
    BivarPoly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  BivarPoly term() {
    BivarPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
        continue;
      }
      skip();
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
        throw ParseError("missing explicit '*'", pos_);
      return acc;
    }
  }

  BivarPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivarPoly power() {
    BivarPoly base = primary();
    if (!accept('^')) return base;
    skip();
    if (peek() == '-') throw ParseError("negative exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("exponent must be a nonnegative integer", pos_);
    const std::size_t start = pos_;
    const Integer e = natural();
    skip();
    if (peek() == '/' || peek() == '.') throw ParseError("fractional exponent", pos_);
    if (e > kMaxExponent) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  BivarPoly primary() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = natural();
      if (accept('/')) {
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected denominator", pos_);
        const std::size_t at = pos_;
        Integer den = natural();
        if (den == 0) throw ParseError("zero denominator", at);
        Rational r(num, den);
        r.canonicalize();
        return BivarPoly::constant(r);
      }
      return BivarPoly::constant(Rational(num));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        throw ParseError("unknown variable", pos_ - 1);
      return c == 'x' ? BivarPoly::x() : BivarPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (!accept(')')) {
        skip();
        throw ParseError("expected ')'", pos_);
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      throw ParseError("unknown variable", pos_);
    throw ParseError(unexpected(), pos_);
  }

  Integer natural() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace quartic
