#pragma once

#include <memory>

#include "quartic/poly.hpp"

namespace quartic {

/// Q[t]/(modulus) for a monic irreducible modulus.
struct NumberField {
  UniPoly modulus;
};

/// Element of a number field, stored as its reduced representative. An
/// element without a field is a rational constant; it adopts the field of
/// whatever it is combined with, so Poly<NumberFieldElem> can build its
/// constants from plain integers.
class NumberFieldElem {
 public:
  NumberFieldElem() = default;
  NumberFieldElem(int v) : rep_(UniPoly::constant(Rational(v))) {}  // NOLINT: ring literal
  NumberFieldElem(const Rational& v) : rep_(UniPoly::constant(v)) {}  // NOLINT
  NumberFieldElem(std::shared_ptr<const NumberField> field, const UniPoly& rep);

  /// The generator t of the field.
  static NumberFieldElem generator(std::shared_ptr<const NumberField> field);

  const std::shared_ptr<const NumberField>& field() const { return field_; }
  const UniPoly& representative() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const { return rep_.coeff(0); }

  NumberFieldElem inverse() const;

  /// det(z - mult_by_this) over Q; a power of the minimal polynomial.
  UniPoly charpoly() const;
  UniPoly minpoly() const;

  friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b);
  friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b);
  friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b);
  friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) {
    return a * b.inverse();
  }
  NumberFieldElem operator-() const;
  friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);
  friend bool operator!=(const NumberFieldElem& a, const NumberFieldElem& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const NumberField> field_;
  UniPoly rep_;
};

using FieldPoly = Poly<NumberFieldElem>;

/// Lifts a rational polynomial into the field.
FieldPoly lift(const UniPoly& p);

}  // namespace quartic
