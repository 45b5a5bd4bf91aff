#include "quartic/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "quartic/factor.hpp"
#include "quartic/resultant.hpp"

namespace quartic {

namespace {

Box real_box(const RealInterval& iv) { return {iv.lo, iv.hi, 0, 0}; }

// Offsets tried when a split line passes through a root.
Rational perturbation(int attempt, const Rational& span) {
  const int k = (attempt + 1) / 2;
  const Rational step = span / 61;
  return attempt % 2 == 1 ? Rational(step * k) : Rational(-step * k);
}

// Splits box along the real (vertical line) or imaginary axis at a line
// avoiding roots of p; returns the two halves and their counts.
struct Split {
  Box first, second;
  int first_count, second_count;
};

Split split_box(const UniPoly& p, const Box& box, bool along_re) {
  const Rational lo = along_re ? box.re_lo : box.im_lo;
  const Rational hi = along_re ? box.re_hi : box.im_hi;
  const Rational span = hi - lo;
  const Rational mid = (lo + hi) / 2;
  for (int attempt = 0; attempt < 40; ++attempt) {
    const Rational cut = mid + perturbation(attempt, span / 4);
    Box a = box, b = box;
    if (along_re) {
      a.re_hi = cut;
      b.re_lo = cut;
    } else {
      a.im_hi = cut;
      b.im_lo = cut;
    }
    auto ca = count_roots_in_box(p, a);
    if (!ca) continue;
    auto cb = count_roots_in_box(p, b);
    if (!cb) continue;
    return {a, b, *ca, *cb};
  }
  throw PrecisionExhaustedError("could not find a root-free split line");
}

std::complex<double> midpoint(const Box& b) {
  return {to_double(b.re_mid()), to_double(b.im_mid())};
}

}  // namespace

RootBox RootBox::real_root(const UniPoly& poly, const RealInterval& iv) {
  RootBox r;
  r.poly_ = poly;
  r.real_ = true;
  r.iv_ = iv;
  r.box_ = real_box(iv);
  return r;
}

RootBox RootBox::certify(const UniPoly& poly, const Box& box) {
  if (!is_squarefree(poly))
    throw std::invalid_argument("root box needs a square-free polynomial");
  if (box.im_lo == box.im_hi) {
    if (sgn(box.im_lo) != 0)
      throw std::invalid_argument("degenerate box off the real axis");
    auto roots = isolate_real_roots(poly, box.re_lo, box.re_hi);
    if (roots.size() != 1)
      throw std::invalid_argument("real segment does not isolate one root");
    return real_root(poly, roots.front());
  }
  auto count = count_roots_in_box(poly, box);
  if (!count || *count != 1)
    throw std::invalid_argument("box does not isolate exactly one root");
  if (sgn(box.im_lo) < 0 && sgn(box.im_hi) > 0 &&
      sturm_real_root_count(poly, box.re_lo, box.re_hi) == 1) {
    auto roots = isolate_real_roots(poly, box.re_lo, box.re_hi);
    return real_root(poly, roots.front());
  }
  RootBox r;
  r.poly_ = poly;
  r.box_ = box;
  r.real_ = false;
  return r;
}

RootBox RootBox::refined(const Rational& width, int budget) const {
  RootBox r = *this;
  int steps = 0;
  if (real_) {
    while (!r.iv_.exact() && r.iv_.width() > width) {
      if (++steps > budget)
        throw PrecisionExhaustedError("root refinement budget exhausted");
      const Rational mid = r.iv_.midpoint();
      const int s = sign_at(poly_, mid);
      if (s == 0) {
        r.iv_ = {mid, mid};
      } else if (s == sign_at(poly_, r.iv_.lo)) {
        r.iv_.lo = mid;
      } else {
        r.iv_.hi = mid;
      }
    }
    r.box_ = real_box(r.iv_);
    return r;
  }
  while (r.box_.width() > width) {
    if (++steps > budget)
      throw PrecisionExhaustedError("root refinement budget exhausted");
    const bool along_re = r.box_.re_width() >= r.box_.im_width();
    Split s = split_box(poly_, r.box_, along_re);
    r.box_ = s.first_count == 1 ? s.first : s.second;
  }
  return r;
}

RootBox RootBox::conjugate() const {
  if (real_) return *this;
  RootBox r = *this;
  r.box_ = box_.mirrored();
  return r;
}

RootBox RootBox::negated() const {
  RootBox r;
  r.poly_ = poly_.scale_argument(Rational(-1)).monic();
  r.real_ = real_;
  r.iv_ = {-iv_.hi, -iv_.lo};
  r.box_ = {-box_.re_hi, -box_.re_lo, -box_.im_hi, -box_.im_lo};
  return r;
}

bool RootBox::same_root(const RootBox& other) const {
  if (poly_.monic() != other.poly_.monic())
    throw std::invalid_argument("same_root compares roots of one polynomial");
  if (real_ != other.real_) return false;
  if (real_) {
    if (iv_.exact() || other.iv_.exact()) {
      if (iv_.exact() && other.iv_.exact()) return iv_.lo == other.iv_.lo;
      const RealInterval& e = iv_.exact() ? iv_ : other.iv_;
      const RealInterval& o = iv_.exact() ? other.iv_ : iv_;
      return o.lo < e.lo && e.lo < o.hi;
    }
    const Rational lo = std::max(iv_.lo, other.iv_.lo);
    const Rational hi = std::min(iv_.hi, other.iv_.hi);
    if (lo >= hi) return false;
    return sturm_real_root_count(poly_, lo, hi) == 1;
  }
  RootBox a = *this, b = other;
  for (int round = 0; round < 200; ++round) {
    if (a.box_.disjoint(b.box_)) return false;
    auto c = count_roots_in_box(poly_, a.box_.hull(b.box_));
    if (c && *c == 1) return true;
    a = a.refined(a.box_.width() / 2);
    b = b.refined(b.box_.width() / 2);
  }
  throw PrecisionExhaustedError("could not separate or identify two roots");
}

std::complex<double> RootBox::approx() const { return midpoint(box_); }

std::complex<long double> RootBox::approx(const Rational& width) const {
  RootBox r = refined(width);
  const Rational re = r.box_.re_mid(), im = r.box_.im_mid();
  // Two-step conversion keeps long double precision beyond a double.
  auto to_ld = [](const Rational& q) {
    const double head = q.get_d();
    const Rational rest = q - Rational(head);
    return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
  };
  return {to_ld(re), to_ld(im)};
}

std::vector<RootBox> isolate_all_roots(const UniPoly& p) {
  std::vector<RootBox> out;
  if (p.degree() <= 0) return out;
  if (!is_squarefree(p))
    throw std::invalid_argument("root isolation needs a square-free polynomial");
  const UniPoly q = p.monic();
  for (const auto& iv : isolate_real_roots(q)) out.push_back(RootBox::real_root(q, iv));
  const int n_real = static_cast<int>(out.size());
  const int k = (q.degree() - n_real) / 2;
  if (k == 0) return out;

  const Rational bound = root_bound(q);
  Rational delta = bound / 2;
  Box upper;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 400) throw PrecisionExhaustedError("upper half-plane search failed");
    upper = {-bound, bound, delta, bound};
    auto c = count_roots_in_box(q, upper);
    if (c && *c == k) break;
    delta /= 2;
  }

  std::vector<RootBox> found;
  std::vector<std::pair<Box, int>> work{{upper, k}};
  int guard = 0;
  while (!work.empty()) {
    if (++guard > 100000) throw PrecisionExhaustedError("root isolation did not converge");
    auto [box, count] = work.back();
    work.pop_back();
    if (count == 0) continue;
    if (count == 1) {
      found.push_back(RootBox::certify(q, box));
      continue;
    }
    const bool along_re = box.re_width() >= box.im_width();
    Split s = split_box(q, box, along_re);
    work.emplace_back(s.second, s.second_count);
    work.emplace_back(s.first, s.first_count);
  }
  std::sort(found.begin(), found.end(), [](const RootBox& a, const RootBox& b) {
    if (a.box().re_mid() != b.box().re_mid()) return a.box().re_mid() < b.box().re_mid();
    return a.box().im_mid() < b.box().im_mid();
  });
  for (const auto& r : found) {
    out.push_back(r);
    out.push_back(r.conjugate());
  }
  return out;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  return AlgebraicNumber(RootBox::real_root(UniPoly{-r, Rational(1)}, {r, r}));
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const UniPoly& irreducible) {
  std::vector<AlgebraicNumber> out;
  for (auto& r : isolate_all_roots(irreducible.monic())) out.push_back(AlgebraicNumber(r));
  return out;
}

AlgebraicNumber AlgebraicNumber::with_budget(int budget) const {
  return AlgebraicNumber(root_, budget);
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("algebraic number is irrational");
  return -minpoly().coeff(0);
}

AlgebraicNumber AlgebraicNumber::conjugate() const {
  return AlgebraicNumber(root_.conjugate(), budget_);
}

AlgebraicNumber AlgebraicNumber::negated() const {
  return AlgebraicNumber(root_.negated(), budget_);
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return quartic::to_string(rational_value());
  const auto z = approx(Rational(1, 1000000000000));
  // Purely imaginary numbers print an exact 0 real part.
  const double re = !is_real() && rotated_is_real(*this, Rational(1, 2)) ? 0.0 : static_cast<double>(z.real());
  std::ostringstream os;
  os.precision(6);
  os << "RootOf(" << quartic::to_string(minpoly()) << ", ~" << re;
  if (!is_real()) os << (z.imag() < 0 ? "-" : "+") << std::fabs(static_cast<double>(z.imag())) << "i";
  os << ")";
  return os.str();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.minpoly() != b.minpoly()) return false;
  return a.root_.same_root(b.root_);
}

namespace {

std::size_t root_index(const AlgebraicNumber& a) {
  const auto roots = isolate_all_roots(a.minpoly());
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].same_root(a.root())) return i;
  throw std::logic_error("algebraic number not among its minimal polynomial's roots");
}

}  // namespace

bool algebraic_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.minpoly() != b.minpoly()) return poly_less(a.minpoly(), b.minpoly());
  if (a.is_rational()) return false;
  return root_index(a) < root_index(b);
}

AlgebraicNumber minpoly_of_root(const UniPoly& defining, const Box& box) {
  if (defining.is_zero()) throw std::invalid_argument("zero polynomial has no minimal root");
  const UniPoly sqf = squarefree_part(defining);
  const bool segment = box.im_lo == box.im_hi;
  auto count_in = [&](const UniPoly& p) -> std::optional<int> {
    if (segment) {
      if (sgn(box.im_lo) != 0) return 0;
      return static_cast<int>(isolate_real_roots(p, box.re_lo, box.re_hi).size());
    }
    return count_roots_in_box(p, box);
  };
  auto total = count_in(sqf);
  if (!total || *total != 1)
    throw std::invalid_argument("box must contain exactly one root, away from its boundary");
  for (const auto& f : split_squarefree_deg_le4(sqf)) {
    auto c = count_in(f);
    if (c && *c == 1) return AlgebraicNumber(RootBox::certify(f, box));
  }
  throw std::logic_error("no factor vanishes in the isolating box");
}

AlgebraicNumber refine_box(const AlgebraicNumber& a, const Rational& width_bound) {
  return AlgebraicNumber(a.root_.refined(width_bound, a.budget_), a.budget_);
}

bool rotated_is_real(const AlgebraicNumber& c, const Rational& turn) {
  // turn mod 2 reduced to s/m with m > 0.
  const Integer m = turn.get_den();
  const bool integral_turn = m == 1;
  if (c.is_zero()) return true;
  if (c.is_real()) return integral_turn;
  if (integral_turn) return false;
  if (!mpz_fits_sint_p(m.get_mpz_t()) || m > 10000)
    throw UnsupportedDegreeError("rotation denominator too large");
  const unsigned two_m = 2u * static_cast<unsigned>(m.get_si());

  // d = c^(2m) is a root of g; w = c*exp(i*pi*turn) satisfies w^(2m) = d.
  // w is real iff d > 0 and arg(w) is a multiple of pi; candidate arguments
  // differ by pi/m, so a coarse angle settles the second condition.
  const UniPoly g = multiplication_charpoly(c.minpoly(), UniPoly::monomial(Rational(1), static_cast<int>(two_m)));
  const UniPoly sqf = squarefree_part(g);
  AlgebraicNumber cur = c;
  std::optional<AlgebraicNumber> d;
  for (int round = 0; round < 200 && !d; ++round) {
    Box enc = cur.box();
    for (unsigned i = 1; i < two_m; ++i) enc = box_mul(enc, cur.box());
    auto cnt = count_roots_in_box(sqf, enc);
    if (cnt && *cnt == 1) {
      d = minpoly_of_root(sqf, enc);
      break;
    }
    cur = refine_box(cur, cur.box().width() / 4);
  }
  if (!d) throw PrecisionExhaustedError("could not isolate a power of an algebraic number");
  if (!d->is_real() || d->box().re_hi <= 0) return false;

  // |c| is bounded away from zero; shrink until the angle error is tiny.
  const auto approx0 = cur.approx();
  const Rational modulus_floor = from_double(std::abs(approx0) / 2);
  cur = refine_box(cur, modulus_floor / (1000 * m));
  const auto z = cur.approx();
  const long double angle = std::atan2(static_cast<long double>(z.imag()),
                                       static_cast<long double>(z.real())) +
                            std::numbers::pi_v<long double> * static_cast<long double>(turn.get_d());
  const long double k = std::round(angle / std::numbers::pi_v<long double>);
  return std::fabs(angle - k * std::numbers::pi_v<long double>) <
         std::numbers::pi_v<long double> / (4.0L * static_cast<long double>(m.get_si()));
}

}  // namespace quartic
