#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quartic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error the library raises on invalid input or
/// unsupported configurations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSingularError : public Error {
 public:
  using Error::Error;
};

class MultipleComponentError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedTowerDepthError : public Error {
 public:
  using Error::Error;
};

class PrecisionExhaustedError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact rational from a finite double (every double is a dyadic rational).
inline Rational from_double(double v) { return Rational(v); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Least common multiple of the denominators seen so far.
inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

/// True when r is the square of a rational; `root` receives the
/// nonnegative square root.
inline bool rational_sqrt(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  if (!is_perfect_square(r.get_num()) || !is_perfect_square(r.get_den()))
    return false;
  root = Rational(isqrt(r.get_num()), isqrt(r.get_den()));
  root.canonicalize();
  return true;
}

inline Rational floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

}  // namespace quartic
