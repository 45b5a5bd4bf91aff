#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "quartic/algebraic.hpp"

using namespace quartic;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

UniPoly from_roots(const std::vector<std::pair<Rational, Rational>>& roots) {
  // Real roots give linear factors; (a, b) with b != 0 contributes the
  // conjugate pair a +- bi.
  UniPoly p{Rational(1)};
  for (const auto& [a, b] : roots) {
    if (sgn(b) == 0)
      p = p * UniPoly{-a, Rational(1)};
    else
      p = p * UniPoly{a * a + b * b, -2 * a, Rational(1)};
  }
  return p;
}

}  // namespace

TEST_CASE("winding count on hand-checked boxes") {
  const UniPoly z2p1{q(1), q(0), q(1)};
  CHECK(count_roots_in_box(z2p1, {q(-1), q(1), q(1, 2), q(2)}) == 1);
  CHECK(count_roots_in_box(z2p1, {q(-2), q(2), q(-2), q(2)}) == 2);
  CHECK(count_roots_in_box(z2p1, {q(1, 2), q(2), q(-2), q(2)}) == 0);
  CHECK_FALSE(count_roots_in_box(z2p1, {q(-1), q(1), q(1), q(2)}).has_value());
  CHECK_FALSE(count_roots_in_box(z2p1, {q(0), q(0), q(0), q(1)}).has_value());

  const UniPoly z4m1{q(-1), q(0), q(0), q(0), q(1)};
  CHECK(count_roots_in_box(z4m1, {q(-2), q(2), q(-2), q(2)}) == 4);
  CHECK(count_roots_in_box(z4m1, {q(1, 2), q(2), q(-1, 2), q(1, 2)}) == 1);
  CHECK(count_roots_in_box(z4m1, {q(-1, 2), q(1, 2), q(-1, 2), q(1, 2)}) == 0);

  const UniPoly double_root{q(1), q(-2), q(1)};
  CHECK(count_roots_in_box(double_root, {q(0), q(2), q(-1), q(1)}) == 2);
}

TEST_CASE("winding count agrees with known root locations") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<Rational, Rational>> roots;
    const int pairs = 1 + trial % 2;
    for (int i = 0; i < pairs; ++i) roots.emplace_back(q(num(rng), 4), q(1 + std::abs(num(rng)), 4));
    roots.emplace_back(q(num(rng), 4), q(0));
    const UniPoly p = from_roots(roots);
    Box box{q(num(rng), 3), q(0), q(num(rng), 3), q(0)};
    box.re_hi = box.re_lo + q(1 + std::abs(num(rng)), 2);
    box.im_hi = box.im_lo + q(1 + std::abs(num(rng)), 2);
    // Oracle: count listed roots (with conjugates) strictly inside; skip
    // boxes with a root on the boundary.
    int inside = 0;
    bool boundary = false;
    auto visit = [&](const Rational& re, const Rational& im) {
      const bool in_re = box.re_lo < re && re < box.re_hi;
      const bool in_im = box.im_lo < im && im < box.im_hi;
      const bool on_re = box.re_lo <= re && re <= box.re_hi;
      const bool on_im = box.im_lo <= im && im <= box.im_hi;
      if (in_re && in_im) ++inside;
      else if (on_re && on_im) boundary = true;
    };
    for (const auto& [a, b] : roots) {
      visit(a, b);
      if (sgn(b) != 0) visit(a, -b);
    }
    auto got = count_roots_in_box(p, box);
    // A horizontal edge on the real axis makes Im p vanish identically there.
    if (boundary || sgn(box.im_lo) == 0 || sgn(box.im_hi) == 0) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == inside);
    }
  }
}

TEST_CASE("interval enclosures contain sampled products") {
  const Box a{q(1), q(2), q(-1), q(1, 2)};
  const Box b{q(-3), q(-1, 2), q(1, 3), q(2)};
  const Box prod = box_mul(a, b);
  const Box sum = box_add(a, b);
  for (const auto& x : {GaussRational(q(1), q(-1)), GaussRational(q(2), q(1, 2)), GaussRational(q(3, 2), q(0))})
    for (const auto& y : {GaussRational(q(-3), q(1, 3)), GaussRational(q(-1, 2), q(2)), GaussRational(q(-1), q(1))}) {
      const GaussRational z = x * y;
      CHECK(prod.contains({z.re, z.re, z.im, z.im}));
      const GaussRational s = x + y;
      CHECK(sum.contains({s.re, s.re, s.im, s.im}));
    }
}

TEST_CASE("square root of two refines to a tiny box") {
  const auto roots = AlgebraicNumber::roots_of(UniPoly{q(-2), q(0), q(1)});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].is_real());
  const AlgebraicNumber r = refine_box(roots[1], q(1, 1000000));
  CHECK(r.box().width() <= q(1, 1000000));
  CHECK(sgn(r.box().re_lo * r.box().re_lo - 2) <= 0);
  CHECK(sgn(r.box().re_hi * r.box().re_hi - 2) >= 0);
  CHECK(std::abs(r.approx().real() - std::sqrt(2.0)) < 1e-6);
  CHECK(r == roots[1]);
  CHECK(r != roots[0]);
  CHECK(r.negated() == roots[0]);
}

TEST_CASE("minimal polynomial of a root picked by a box") {
  const UniPoly defining = UniPoly{q(-1), q(1)} * UniPoly{q(1), q(0), q(1)};
  const AlgebraicNumber i = minpoly_of_root(defining, {q(-1, 2), q(1, 2), q(1, 2), q(3, 2)});
  CHECK(i.minpoly() == UniPoly{q(1), q(0), q(1)});
  CHECK_FALSE(i.is_real());
  CHECK(std::abs(i.approx(q(1, 1000000)) - std::complex<long double>(0, 1)) < 1e-6L);
  CHECK(i.conjugate() != i);
  CHECK(i.conjugate() == minpoly_of_root(defining, {q(-1, 2), q(1, 2), q(-3, 2), q(-1, 2)}));

  const AlgebraicNumber one = minpoly_of_root(defining, {q(1, 2), q(3, 2), q(-1, 2), q(1, 2)});
  CHECK(one.is_rational());
  CHECK(one.rational_value() == 1);

  CHECK_THROWS_AS(minpoly_of_root(defining, {q(2), q(3), q(-1), q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(minpoly_of_root(defining, {q(-2), q(2), q(-2), q(2)}), std::invalid_argument);
}

TEST_CASE("cube roots of five") {
  const UniPoly p{q(-5), q(0), q(0), q(1)};
  const auto roots = AlgebraicNumber::roots_of(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].is_real());
  CHECK_FALSE(roots[1].is_real());
  CHECK(roots[2] == roots[1].conjugate());
  CHECK(roots[1].box().mirrored() == roots[2].box());
  const double c = std::cbrt(5.0);
  const std::complex<long double> expected(c * std::cos(2 * M_PI / 3), c * std::sin(2 * M_PI / 3));
  CHECK(std::abs(roots[1].approx(q(1, 100000000)) - expected) < 1e-7L);
  CHECK(algebraic_less(roots[0], roots[1]));
  CHECK_FALSE(algebraic_less(roots[1], roots[0]));
}

TEST_CASE("isolation of all roots of mixed polynomials") {
  const UniPoly p = from_roots({{q(1, 3), q(2)}, {q(1, 3), q(1, 1000)}, {q(-1), q(0)}});
  const auto roots = isolate_all_roots(p);
  REQUIRE(roots.size() == 5);
  int real = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].is_real()) ++real;
    for (std::size_t j = i + 1; j < roots.size(); ++j) CHECK_FALSE(roots[i].same_root(roots[j]));
  }
  CHECK(real == 1);
  CHECK_THROWS_AS(isolate_all_roots(UniPoly{q(1), q(-2), q(1)}), std::invalid_argument);
}

TEST_CASE("refinement budget is enforced") {
  const auto roots = AlgebraicNumber::roots_of(UniPoly{q(1), q(0), q(1)});
  const AlgebraicNumber tight = roots[0].with_budget(3);
  CHECK_THROWS_AS(refine_box(tight, q(1, 1000000000)), PrecisionExhaustedError);
}

TEST_CASE("rotation realness") {
  const auto i_roots = AlgebraicNumber::roots_of(UniPoly{q(1), q(0), q(1)});
  const AlgebraicNumber i = i_roots[0].approx().imag() > 0 ? i_roots[0] : i_roots[1];
  CHECK(rotated_is_real(i, q(1, 2)));
  CHECK(rotated_is_real(i, q(-1, 2)));
  CHECK_FALSE(rotated_is_real(i, q(1, 4)));
  CHECK_FALSE(rotated_is_real(i, q(0)));

  // 1 + i has minimal polynomial z^2 - 2z + 2.
  const auto roots = AlgebraicNumber::roots_of(UniPoly{q(2), q(-2), q(1)});
  const AlgebraicNumber w = roots[0].approx().imag() > 0 ? roots[0] : roots[1];
  CHECK(rotated_is_real(w, q(-1, 4)));
  CHECK(rotated_is_real(w, q(3, 4)));
  CHECK_FALSE(rotated_is_real(w, q(1, 4)));
  CHECK_FALSE(rotated_is_real(w, q(1, 3)));

  const AlgebraicNumber s2 = AlgebraicNumber::roots_of(UniPoly{q(-2), q(0), q(1)})[1];
  CHECK(rotated_is_real(s2, q(1)));
  CHECK_FALSE(rotated_is_real(s2, q(1, 2)));
  CHECK(rotated_is_real(AlgebraicNumber::from_rational(q(3)), q(2)));
  CHECK(rotated_is_real(AlgebraicNumber::from_rational(q(0)), q(1, 3)));
}
