#include "quartic/number_field.hpp"

#include <stdexcept>

#include "quartic/resultant.hpp"

namespace quartic {

namespace {

std::shared_ptr<const NumberField> common_field(const NumberFieldElem& a,
                                                const NumberFieldElem& b) {
  if (!a.field()) return b.field();
  if (!b.field() || a.field() == b.field()) return a.field();
  if (a.field()->modulus != b.field()->modulus)
    throw std::invalid_argument("number field elements from different fields");
  return a.field();
}

}  // namespace

NumberFieldElem::NumberFieldElem(std::shared_ptr<const NumberField> field, const UniPoly& rep)
    : field_(std::move(field)), rep_(rep) {
  if (field_) rep_ = rep_ % field_->modulus;
}

NumberFieldElem NumberFieldElem::generator(std::shared_ptr<const NumberField> field) {
  return NumberFieldElem(std::move(field), UniPoly::variable());
}

NumberFieldElem NumberFieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in a number field");
  if (!field_ || is_rational()) return NumberFieldElem(field_, UniPoly::constant(1 / rep_.coeff(0)));
  auto [g, s, t] = extended_gcd(rep_, field_->modulus);
  if (g.degree() != 0) throw std::domain_error("number field modulus is reducible");
  return NumberFieldElem(field_, s);
}

UniPoly NumberFieldElem::charpoly() const {
  if (!field_) return UniPoly{-rep_.coeff(0), Rational(1)};
  return multiplication_charpoly(field_->modulus, rep_);
}

UniPoly NumberFieldElem::minpoly() const { return squarefree_part(charpoly()); }

NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
  return NumberFieldElem(common_field(a, b), a.rep_ + b.rep_);
}

NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) {
  return NumberFieldElem(common_field(a, b), a.rep_ - b.rep_);
}

NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
  return NumberFieldElem(common_field(a, b), a.rep_ * b.rep_);
}

NumberFieldElem NumberFieldElem::operator-() const { return NumberFieldElem(field_, -rep_); }

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
  return a.rep_ == b.rep_;
}

FieldPoly lift(const UniPoly& p) {
  std::vector<NumberFieldElem> c;
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return FieldPoly(std::move(c));
}

}  // namespace quartic
