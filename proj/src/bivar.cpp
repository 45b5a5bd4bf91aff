#include "quartic/bivar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "quartic/resultant.hpp"

namespace quartic {

BivarPoly::BivarPoly(const Terms& terms) {
  for (const auto& [e, c] : terms) {
    if (e.first < 0 || e.second < 0) throw std::invalid_argument("negative exponent in polynomial");
    add_term(e, c);
  }
}

void BivarPoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(c, 0, 0); }
BivarPoly BivarPoly::x() { return monomial(Rational(1), 1, 0); }
BivarPoly BivarPoly::y() { return monomial(Rational(1), 0, 1); }

BivarPoly BivarPoly::monomial(const Rational& c, int i, int j) {
  BivarPoly p;
  p.add_term({i, j}, c);
  return p;
}

BivarPoly BivarPoly::from_y_coeffs(const std::vector<UniPoly>& coeffs) {
  BivarPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (int i = 0; i <= coeffs[j].degree(); ++i)
      p.add_term({i, static_cast<int>(j)}, coeffs[j].coeff(i));
  return p;
}

BivarPoly BivarPoly::in_x(const UniPoly& p) { return from_y_coeffs({p}); }

BivarPoly BivarPoly::in_y(const UniPoly& p) {
  BivarPoly out;
  for (int j = 0; j <= p.degree(); ++j) out.add_term({0, j}, p.coeff(j));
  return out;
}

Rational BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BivarPoly::order() const {
  if (terms_.empty()) return -1;
  int d = total_degree();
  for (const auto& [e, c] : terms_) d = std::min(d, e.first + e.second);
  return d;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e.first; ++k) t *= x;
    for (int k = 0; k < e.second; ++k) t *= y;
    acc += t;
  }
  return acc;
}

BivarPoly BivarPoly::partial_x() const {
  BivarPoly p;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) p.add_term({e.first - 1, e.second}, c * e.first);
  return p;
}

BivarPoly BivarPoly::partial_y() const {
  BivarPoly p;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) p.add_term({e.first, e.second - 1}, c * e.second);
  return p;
}

BivarPoly BivarPoly::homogeneous_part(int d) const {
  BivarPoly p;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == d) p.add_term(e, c);
  return p;
}

BivarPoly BivarPoly::translate(const Rational& a, const Rational& b) const {
  if (sgn(a) == 0 && sgn(b) == 0) return *this;
  const BivarPoly xs = x() + constant(a);
  const BivarPoly ys = y() + constant(b);
  BivarPoly out;
  for (const auto& [e, c] : terms_)
    out += c * (xs.pow(static_cast<unsigned>(e.first)) * ys.pow(static_cast<unsigned>(e.second)));
  return out;
}

BivarPoly BivarPoly::linear_substitute(const Rational& a, const Rational& b,
                                       const Rational& c, const Rational& d) const {
  const BivarPoly xs = a * x() + b * y();
  const BivarPoly ys = c * x() + d * y();
  BivarPoly out;
  for (const auto& [e, k] : terms_)
    out += k * (xs.pow(static_cast<unsigned>(e.first)) * ys.pow(static_cast<unsigned>(e.second)));
  return out;
}

BivarPoly BivarPoly::swap_variables() const {
  BivarPoly p;
  for (const auto& [e, c] : terms_) p.add_term({e.second, e.first}, c);
  return p;
}

std::vector<UniPoly> BivarPoly::y_coeffs() const {
  const int dy = degree_y();
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dy + 1));
  for (const auto& [e, c] : terms_) {
    auto& v = raw[static_cast<std::size_t>(e.second)];
    if (static_cast<int>(v.size()) <= e.first) v.resize(static_cast<std::size_t>(e.first) + 1, Rational(0));
    v[static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<UniPoly> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<UniPoly> BivarPoly::x_coeffs() const { return swap_variables().y_coeffs(); }

UniPoly BivarPoly::restrict_y(const Rational& y0) const {
  std::vector<UniPoly> cy = y_coeffs();
  UniPoly out;
  Rational pw = 1;
  for (const auto& c : cy) {
    out += pw * c;
    pw *= y0;
  }
  return out;
}

UniPoly BivarPoly::restrict_x(const Rational& x0) const {
  return swap_variables().restrict_y(x0);
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly out = constant(1), base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      p.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return p;
}

BivarPoly operator*(const Rational& s, const BivarPoly& p) {
  BivarPoly out;
  if (sgn(s) == 0) return out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
  return out;
}

std::string to_string(const BivarPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<BivarPoly::Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(to_string(mag));
    auto var = [&](const char* name, int k) {
      if (k == 0) return;
      factors.push_back(k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k));
    };
    var("x", e.first);
    var("y", e.second);
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

UniPoly content_in_x(const BivarPoly& f) {
  UniPoly g;
  for (const auto& c : f.y_coeffs()) g = gcd(g, c);
  return g;
}

BivarPoly divide_by_x_poly(const BivarPoly& f, const UniPoly& d) {
  std::vector<UniPoly> cy = f.y_coeffs();
  for (auto& c : cy) c = exact_div(c, d);
  return BivarPoly::from_y_coeffs(cy);
}

UniPoly resultant_y(const BivarPoly& f, const BivarPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return eliminate(f.y_coeffs(), g.y_coeffs());
}

bool is_squarefree(const BivarPoly& f) {
  if (f.is_zero()) return false;
  const UniPoly content = content_in_x(f);
  if (content.degree() > 0 && !is_squarefree(content)) return false;
  const BivarPoly pp = divide_by_x_poly(f, content);
  if (pp.degree_y() <= 1) return true;
  return !resultant_y(pp, pp.partial_y()).is_zero();
}

}  // namespace quartic
