#include <random>

#include "doctest.h"
#include "quartic/factor.hpp"
#include "quartic/resultant.hpp"
#include "quartic/sturm.hpp"

using namespace quartic;

namespace {

UniPoly P(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long c : ascending) v.emplace_back(c);
  return UniPoly(std::move(v));
}

UniPoly lin(const Rational& root) { return UniPoly{-root, Rational(1)}; }

// Oracle: Sylvester determinant by plain Gaussian elimination over Q.
Rational sylvester_det(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> ca(a.coefficients()), cb(b.coefficients());
  auto m = sylvester_matrix(ca, cb, Rational(0));
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  int d = deg(rng);
  std::vector<Rational> v;
  for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
  if (v.back() == 0) v.back() = 1;
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("uni_gcd examples") {
  CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(gcd(P({1, 0, 1}), P({-1, 0, 1})) == P({1}));
  // (z-1)^2 (z+2) = z^3 - 3z + 2 and (z-1)(z+3) = z^2 + 2z - 3; by hand the
  // Euclidean remainder is 8z - 8, so the gcd is z - 1.
  CHECK(gcd(P({2, -3, 0, 1}), P({-3, 2, 1})) == P({-1, 1}));
  CHECK(gcd(P({4, 2}), UniPoly{}) == P({2, 1}));
}

TEST_CASE("gcd divides both and is maximal on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    UniPoly common = random_poly(rng, 2);
    if (common.is_zero()) continue;
    UniPoly p = random_poly(rng, 4) * common;
    UniPoly q = random_poly(rng, 4) * common;
    if (p.is_zero() || q.is_zero()) continue;
    UniPoly g = gcd(p, q);
    CHECK(divides(g, p));
    CHECK(divides(g, q));
    CHECK(divides(common, g * P({1})));  // every common divisor divides g
    CHECK(g.leading() == 1);
  }
}

TEST_CASE("squarefree decomposition examples") {
  auto sq = squarefree_decomposition(P({2, -3, 0, 1}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == std::make_pair(P({2, 1}), 1));
  CHECK(sq[1] == std::make_pair(P({-1, 1}), 2));
  auto irr = squarefree_decomposition(P({1, 0, 1}));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].second == 1);
  auto dbl = squarefree_decomposition(P({-2, 0, 1}).pow(2));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0] == std::make_pair(P({-2, 0, 1}), 2));
  CHECK_THROWS(squarefree_decomposition(UniPoly{}));
}

TEST_CASE("squarefree decomposition reconstructs random products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    UniPoly p = P({1});
    for (int k = 0; k < 3; ++k) {
      UniPoly f = random_poly(rng, 2);
      if (f.is_zero()) continue;
      p = p * f.pow(static_cast<unsigned>(mult(rng)));
    }
    if (p.degree() < 1) continue;
    auto dec = squarefree_decomposition(p);
    UniPoly prod = P({1});
    for (std::size_t i = 0; i < dec.size(); ++i) {
      CHECK(is_squarefree(dec[i].first));
      for (std::size_t j = i + 1; j < dec.size(); ++j)
        CHECK(gcd(dec[i].first, dec[j].first).degree() == 0);
      prod = prod * dec[i].first.pow(static_cast<unsigned>(dec[i].second));
    }
    CHECK(prod == p.monic());
  }
}

TEST_CASE("sturm counts") {
  CHECK(sturm_real_root_count(P({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK(sturm_real_root_count(P({-2, 0, 1}), std::nullopt, std::nullopt) == 2);
  CHECK(sturm_real_root_count(P({0, -1, 0, 1}), Rational(0), std::nullopt) == 1);
  // Endpoints are excluded from the open interval.
  CHECK(sturm_real_root_count(P({0, -1, 0, 1}), Rational(-1), Rational(1)) == 1);
  CHECK_THROWS_AS(sturm_real_root_count(P({1, 2, 1}), std::nullopt, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("sturm agrees with a grid sign-change oracle") {
  // Roots at half-integers, grid at odd multiples of 1/8: every root is
  // bracketed by exactly one sign change.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> root(-8, 8), pick(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> roots;
    UniPoly p = P({1});
    int nlin = pick(rng) ? 3 : 4;
    while (static_cast<int>(roots.size()) < nlin) {
      int r = root(rng);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      p = p * lin(Rational(r, 2));
    }
    if (pick(rng)) p = p * P({3, 1, 1});  // no real roots
    int changes = 0;
    int prev = sgn(p(Rational(-41, 8)));
    for (int k = -40; k <= 41; ++k) {
      int s = sgn(p(Rational(2 * k - 1, 8) + Rational(1, 16)));
      if (s != prev) ++changes;
      prev = s;
    }
    CHECK(sturm_real_root_count(p, std::nullopt, std::nullopt) == changes);
  }
}

TEST_CASE("isolation and rational roots") {
  auto ivs = isolate_real_roots(P({0, -1, 0, 1}));
  REQUIRE(ivs.size() == 3);
  auto rr = rational_roots(P({-6, 11, -6, 1}) * P({-2, 0, 1}));
  REQUIRE(rr.size() == 3);
  CHECK(rr[0] == 1);
  CHECK(rr[2] == 3);
  auto half = rational_roots(P({-1, 0, 4}) * P({1, 3}));
  REQUIRE(half.size() == 3);
  CHECK(half[0] == Rational(-1, 2));
  CHECK(half[1] == Rational(-1, 3));
  CHECK(half[2] == Rational(1, 2));
  auto iv = refine_real_root(P({-2, 0, 1}), ivs.back(), Rational(1, 1000000));
  CHECK(iv.width() <= Rational(1, 1000000));
}

TEST_CASE("resultant convention and Sylvester oracle") {
  // res(p, q) = lc(q)^deg p * prod p(beta) over roots beta of q.
  CHECK(resultant(P({-2, 1}), P({-3, 1})) == 1);
  CHECK(resultant(P({1, 0, 1}), P({-1, 1})) == 2);
  CHECK(resultant(P({1, 0, 1}), P({1, 0, 1})) == 0);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
    if (a.degree() < 1 || b.degree() < 1) continue;
    Rational sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
    CHECK(standard_resultant(a, b) == sylvester_det(a, b));
    CHECK(resultant(a, b) == sign * sylvester_det(a, b));
  }
}

TEST_CASE("multiplication charpoly gives the norm polynomial") {
  // Multiplication by t in Q[t]/(t^2 - 2): charpoly z^2 - 2.
  CHECK(multiplication_charpoly(P({-2, 0, 1}), P({0, 1})) == P({-2, 0, 1}));
  // 1 + t with t^2 = 2: roots 1 +- sqrt2, so z^2 - 2z - 1.
  CHECK(multiplication_charpoly(P({-2, 0, 1}), P({1, 1})) == P({-1, -2, 1}));
}

TEST_CASE("factor over Q examples") {
  auto f = factor_over_q_deg_le4(P({1, 0, -2, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::make_pair(P({-1, 1}), 2));
  CHECK(f.factors[1] == std::make_pair(P({1, 1}), 2));
  auto g = factor_over_q_deg_le4(P({1, 0, 1}));
  REQUIRE(g.factors.size() == 1);
  auto h = factor_over_q_deg_le4(P({1, 0, 0, 0, 1}));
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].first == P({1, 0, 0, 0, 1}));
  auto q = factor_over_q_deg_le4(P({1, 0, 1}) * P({-2, 0, 1}));
  REQUIRE(q.factors.size() == 2);
  CHECK_THROWS_AS(factor_over_q_deg_le4(P({1, 0, 0, 0, 0, 1})),
                  UnsupportedDegreeError);
}

TEST_CASE("z^4 + 1 has no rational quadratic split: brute force") {
  // Any split (z^2 + pz + q)(z^2 + rz + s) of a monic integer quartic has
  // integer coefficients (Gauss) with q*s = 1, so q = s = +-1 and |p|,|r| are
  // bounded by the coefficient size.
  const UniPoly target = P({1, 0, 0, 0, 1});
  bool found = false;
  for (int qv : {-1, 1})
    for (int p = -4; p <= 4; ++p)
      for (int r = -4; r <= 4; ++r)
        if (P({qv, p, 1}) * P({qv, r, 1}) == target) found = true;
  CHECK_FALSE(found);
  CHECK(split_squarefree_deg_le4(target).size() == 1);
}

TEST_CASE("factorization multiplies back and factors are irreducible") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-4, 4), shape(0, 3);
  for (int trial = 0; trial < 400; ++trial) {
    UniPoly p;
    switch (shape(rng)) {
      case 0: p = P({c(rng), c(rng), 1}) * P({c(rng), c(rng), 1}); break;
      case 1: p = P({c(rng), 1}) * P({c(rng), c(rng), c(rng), 1}); break;
      case 2: p = P({c(rng), c(rng), c(rng), c(rng), 1}); break;
      default: p = P({c(rng), c(rng), 2}).pow(2); break;
    }
    p = Rational(c(rng) == 0 ? 3 : c(rng)) * p;
    if (p.is_zero()) continue;
    auto f = factor_over_q_deg_le4(p);
    CHECK(f.product() == p);
    for (const auto& [fac, m] : f.factors) {
      CHECK(fac.leading() == 1);
      if (fac.degree() >= 2) CHECK(rational_roots(fac).empty());
      if (fac.degree() == 2) {
        Rational disc = fac.coeff(1) * fac.coeff(1) - 4 * fac.coeff(0), root;
        CHECK_FALSE(rational_sqrt(disc, root));
      }
      if (fac.degree() == 4) {
        // Brute force over integer quadratic pairs (monic integer factor
        // after clearing denominators is not guaranteed; only check when the
        // factor is integral).
        bool integral = true;
        for (const auto& x : fac.coefficients())
          if (x.get_den() != 1) integral = false;
        if (!integral) continue;
        Integer d = fac.coeff(0).get_num();
        for (long q0 = -20; q0 <= 20; ++q0) {
          if (q0 == 0 || d % q0 != 0) continue;
          long s0 = Integer(d / q0).get_si();
          for (long pp = -12; pp <= 12; ++pp) {
            long rr = Integer(fac.coeff(3).get_num()).get_si() - pp;
            CHECK(P({q0, pp, 1}) * P({s0, rr, 1}) != fac);
          }
        }
      }
    }
  }
}
