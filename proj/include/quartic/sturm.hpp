#pragma once

#include <optional>
#include <vector>

#include "quartic/poly.hpp"

namespace quartic {

/// Signed remainder sequence p, p', -rem(p, p'), ...
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Signed remainder sequence starting from an arbitrary pair (a, b). The
/// variation difference V(lo) - V(hi) is the Cauchy index of b/a on (lo, hi].
std::vector<UniPoly> signed_remainder_sequence(const UniPoly& a,
                                               const UniPoly& b);

/// Sign variations of the sequence at z; nullopt stands for -inf / +inf
/// depending on `at_plus_infinity`.
int sign_variations(const std::vector<UniPoly>& seq, const Rational& z);
int sign_variations_at_infinity(const std::vector<UniPoly>& seq, bool positive);

/// Exact number of distinct real roots of p in the open interval (lo, hi).
/// Missing bounds stand for -inf / +inf. p must be square-free; a polynomial
/// with a repeated factor is rejected with std::invalid_argument.
int sturm_real_root_count(const UniPoly& p, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi);

/// Isolating interval for one real root. lo == hi means the root is the
/// rational lo itself; otherwise the root lies in the open interval (lo, hi)
/// and neither endpoint is a root.
struct RealInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// All real roots of the square-free p in the closed interval [lo, hi],
/// ascending, with pairwise disjoint isolating intervals.
std::vector<RealInterval> isolate_real_roots(const UniPoly& p,
                                             const Rational& lo,
                                             const Rational& hi);

/// All real roots of the square-free p.
std::vector<RealInterval> isolate_real_roots(const UniPoly& p);

/// Bisects until the interval width is at most `width`.
RealInterval refine_real_root(const UniPoly& p, RealInterval iv,
                              const Rational& width);

/// Distinct rational roots of p (any degree), ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace quartic
