#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quartic/rational.hpp"

namespace quartic {

/// Dense univariate polynomial over a coefficient ring F, stored by
/// ascending degree. The zero polynomial has no coefficients; otherwise
/// the leading coefficient is nonzero.
///
/// F must be constructible from an int and support +, -, * and ==.
/// Division-based algorithms (divmod, gcd, squarefree decomposition)
/// additionally need F to be a field.
template <class F>
class Poly {
 public:
  using Coeff = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly monomial(const F& c, int deg) {
    std::vector<F> v(static_cast<std::size_t>(deg) + 1, F(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  /// The identity polynomial z.
  static Poly variable() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const F& leading() const {
    assert(!c_.empty());
    return c_.back();
  }
  const std::vector<F>& coefficients() const { return c_; }

  template <class T>
  T evaluate(const T& z) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + T(*it);
    return acc;
  }
  F operator()(const F& z) const { return evaluate<F>(z); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * F(static_cast<int>(i));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return {};
    const F inv = F(1) / leading();
    std::vector<F> v(c_);
    for (auto& x : v) x = x * inv;
    return Poly(std::move(v));
  }

  /// p(z) -> p(z + shift).
  Poly taylor_shift(const F& shift) const {
    Poly out;
    const Poly lin{shift, F(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      out = out * lin + constant(*it);
    return out;
  }

  /// p(z) -> p(scale * z).
  Poly scale_argument(const F& scale) const {
    std::vector<F> v(c_);
    F pw(1);
    for (auto& x : v) {
      x = x * pw;
      pw = pw * scale;
    }
    return Poly(std::move(v));
  }

  /// p(z) -> p(q(z)).
  Poly compose(const Poly& q) const {
    Poly out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      out = out * q + constant(*it);
    return out;
  }

  Poly operator-() const {
    std::vector<F> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const F& s, const Poly& p) {
    std::vector<F> v(p.c_);
    for (auto& x : v) x = s * x;
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const {
    Poly out = constant(F(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) out = out * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

using UniPoly = Poly<Rational>;

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<F>{}, a};
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  const F inv = F(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const F q = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == F(0)) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] =
          rem[static_cast<std::size_t>(i - db + j)] - q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws when b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <class F>
bool divides(const Poly<F>& d, const Poly<F>& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_gcd(const Poly<F>& a,
                                                    const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = F(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// Yun's algorithm. Returns pairwise coprime monic square-free factors with
/// their multiplicities; the product of factor^multiplicity is monic(p).
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& p) {
  if (p.is_zero())
    throw std::invalid_argument("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Poly<F>, int>> out;
  Poly<F> f = p.monic();
  if (f.degree() == 0) return out;
  Poly<F> fp = f.derivative();
  Poly<F> a = gcd(f, fp);
  Poly<F> b = exact_div(f, a);
  Poly<F> c = exact_div(fp, a);
  Poly<F> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<F> g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Monic square-free part of p.
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.is_zero()) return p;
  Poly<F> g = gcd(p, p.derivative());
  return exact_div(p, g).monic();
}

template <class F>
bool is_squarefree(const Poly<F>& p) {
  return !p.is_zero() && gcd(p, p.derivative()).degree() == 0;
}

/// Human readable form with the given variable name, highest degree first.
std::string to_string(const UniPoly& p, const std::string& var = "z");

/// Integer primitive associate: positive leading coefficient, integer
/// coefficients with gcd 1. Same roots as p.
UniPoly primitive_integer_part(const UniPoly& p);

/// Cauchy bound: every complex root has modulus strictly below the result.
Rational root_bound(const UniPoly& p);

/// Sign (-1, 0, 1) of p at a rational point.
inline int sign_at(const UniPoly& p, const Rational& z) { return sgn(p(z)); }

}  // namespace quartic
