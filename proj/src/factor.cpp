#include "quartic/factor.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "quartic/sturm.hpp"

namespace quartic {

UniPoly Factorization::product() const {
  UniPoly out = UniPoly::constant(unit);
  for (const auto& [f, m] : factors) out = out * f.pow(static_cast<unsigned>(m));
  return out;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

namespace {

// Monic quartic without rational roots; returns the quadratic pair if any.
std::optional<std::pair<UniPoly, UniPoly>> split_quartic(const UniPoly& q) {
  const Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  // Resolvent cubic in u = (product of one root pair) + (product of the other).
  const UniPoly resolvent{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b,
                          Rational(1)};
  for (const Rational& u : rational_roots(resolvent)) {
    Rational disc = u * u - 4 * d, root;
    if (!rational_sqrt(disc, root)) continue;
    for (int flip = 0; flip < 2; ++flip) {
      Rational s0 = (u + (flip ? -root : root)) / 2;
      Rational s1 = u - s0;
      std::vector<std::pair<Rational, Rational>> linear;  // (p, r)
      if (s0 != s1) {
        Rational p = (c - a * s0) / (s1 - s0);
        linear.emplace_back(p, a - p);
      } else {
        if (c != a * s0) continue;
        Rational disc2 = a * a - 4 * (b - 2 * s0), r2;
        if (!rational_sqrt(disc2, r2)) continue;
        linear.emplace_back((a + r2) / 2, (a - r2) / 2);
      }
      for (const auto& [p, r] : linear) {
        UniPoly f1{s0, p, Rational(1)};
        UniPoly f2{s1, r, Rational(1)};
        if (f1 * f2 == q) return std::make_pair(f1, f2);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<UniPoly> split_squarefree_deg_le4(const UniPoly& p) {
  if (p.degree() > 4)
    throw UnsupportedDegreeError("unsupported degree " +
                                 std::to_string(p.degree()) +
                                 " for rational factorization (max 4)");
  std::vector<UniPoly> out;
  UniPoly rest = p.monic();
  for (const Rational& r : rational_roots(rest)) {
    UniPoly lin{-r, Rational(1)};
    out.push_back(lin);
    rest = exact_div(rest, lin);
  }
  if (rest.degree() == 4) {
    if (auto pair = split_quartic(rest)) {
      out.push_back(pair->first);
      out.push_back(pair->second);
      rest = UniPoly::constant(Rational(1));
    }
  }
  if (rest.degree() >= 1) out.push_back(rest);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

Factorization factor_over_q_deg_le4(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
  if (p.degree() > 4)
    throw UnsupportedDegreeError("unsupported degree " +
                                 std::to_string(p.degree()) +
                                 " for rational factorization (max 4)");
  Factorization out{p.leading(), {}};
  for (const auto& [sq, mult] : squarefree_decomposition(p))
    for (auto& f : split_squarefree_deg_le4(sq)) out.factors.emplace_back(f, mult);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

}  // namespace quartic
