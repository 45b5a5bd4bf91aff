#include "quartic/rational.hpp"

#include <cctype>

namespace quartic {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational literal: " + s);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

}  // namespace quartic
