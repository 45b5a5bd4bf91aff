#pragma once

#include <cstddef>
#include <string_view>

#include "quartic/bivar.hpp"

namespace quartic {

/// Malformed polynomial text; position() is the 0-based offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' natural)?
///   primary := natural ('/' natural)? | 'x' | 'y' | '(' expr ')'
/// Whitespace is ignored; juxtaposition is rejected.
BivarPoly parse_poly(std::string_view text);

}  // namespace quartic
