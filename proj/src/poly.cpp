#include <sstream>

#include "quartic/poly.hpp"

namespace quartic {

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (i == 0 || a != 1) {
      out << a.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

UniPoly primitive_integer_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, c.get_den());
  std::vector<Rational> v;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    Rational s = c * den;
    v.push_back(s);
    Integer n = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (sgn(p.leading()) < 0) g = -g;
  for (auto& x : v) x /= g;
  return UniPoly(std::move(v));
}

Rational root_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace quartic
