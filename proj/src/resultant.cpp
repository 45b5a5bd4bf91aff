#include "quartic/resultant.hpp"

#include <stdexcept>

namespace quartic {

UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(Rational(1));
  int sign = 1;
  UniPoly prev = UniPoly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

UniPoly eliminate(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  auto trimmed = [](std::vector<UniPoly> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  auto ta = trimmed(a), tb = trimmed(b);
  if (ta.empty() || tb.empty()) return {};
  if (ta.size() == 1 && tb.size() == 1) return UniPoly::constant(Rational(1));
  return bareiss_determinant(sylvester_matrix(ta, tb, UniPoly{}));
}

UniPoly multiplication_charpoly(const UniPoly& modulus, const UniPoly& element) {
  if (modulus.degree() < 1)
    throw std::invalid_argument("multiplication_charpoly: constant modulus");
  const UniPoly mod = modulus.monic();
  const int n = mod.degree();
  // Column j holds element * t^j reduced mod the modulus.
  std::vector<std::vector<UniPoly>> zm(static_cast<std::size_t>(n),
                                      std::vector<UniPoly>(static_cast<std::size_t>(n)));
  UniPoly col = element % mod;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i)
      zm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          UniPoly::constant(-col.coeff(i));
    col = (col * UniPoly::variable()) % mod;
  }
  for (int i = 0; i < n; ++i)
    zm[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +=
        UniPoly::variable();
  return bareiss_determinant(std::move(zm));
}

}  // namespace quartic
