#pragma once

#include <vector>

#include "quartic/poly.hpp"

namespace quartic {

/// Classical resultant Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the
/// roots alpha of a. Equals the Sylvester determinant with a's rows first.
template <class F>
F standard_resultant(Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  F acc(1);
  while (true) {
    if (a.degree() == 0) {
      F out(1);
      for (int i = 0; i < b.degree(); ++i) out = out * a.leading();
      return acc * out;
    }
    if (b.degree() == 0) {
      F out(1);
      for (int i = 0; i < a.degree(); ++i) out = out * b.leading();
      return acc * out;
    }
    Poly<F> r = b % a;
    if (r.is_zero()) return F(0);
    for (int i = 0; i < b.degree() - r.degree(); ++i) acc = acc * a.leading();
    if ((a.degree() * r.degree()) % 2 == 1) acc = -acc;
    b = std::move(a);
    a = std::move(r);
  }
}

/// Resultant with the library convention
///   res(p, q) = lc(q)^deg(p) * prod p(beta) over the roots beta of q,
/// i.e. standard_resultant(q, p). Zero iff p and q share a root.
template <class F>
F resultant(const Poly<F>& p, const Poly<F>& q) {
  return standard_resultant(q, p);
}

/// Fraction-free (Bareiss) determinant over Q[t].
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m);

/// Sylvester matrix of two polynomials given by ascending coefficient lists
/// over any ring; rows of a first.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& a,
                                             const std::vector<R>& b,
                                             const R& zero) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<R>> s(static_cast<std::size_t>(size),
                                std::vector<R>(static_cast<std::size_t>(size), zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
          a[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
          b[static_cast<std::size_t>(n - k)];
  return s;
}

/// Standard resultant of two polynomials in an outer variable whose
/// coefficients (ascending) lie in Q[t]. Used to eliminate a variable.
UniPoly eliminate(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

/// Characteristic polynomial det(z*I - M) of multiplication by `element`
/// in Q[t]/(modulus). Its roots are element(alpha) over the roots alpha of
/// the monic modulus; this is the norm route to minimal polynomials.
UniPoly multiplication_charpoly(const UniPoly& modulus, const UniPoly& element);

}  // namespace quartic
