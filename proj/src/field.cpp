#include "truncgb/field.hpp"

#include <stdexcept>

namespace truncgb {

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw std::invalid_argument("field mismatch: cannot combine GF(2) and Q elements");
  }
}

}  // namespace

std::string to_string(Field f) { return f == Field::gf2 ? "gf2" : "q"; }

FieldElement FieldElement::rational(mpq_class value) {
  value.canonicalize();
  return FieldElement(std::move(value));
}

FieldElement FieldElement::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElement(std::move(q));
}

FieldElement FieldElement::from_int(Field f, long value) {
  if (f == Field::gf2) return gf2(static_cast<int>(value & 1));
  return FieldElement(mpq_class(value));
}

FieldElement FieldElement::from_integer(Field f, const mpz_class& value) {
  if (f == Field::gf2) return gf2(mpz_odd_p(value.get_mpz_t()) ? 1 : 0);
  return FieldElement(mpq_class(value));
}

bool FieldElement::is_zero() const {
  return field_ == Field::gf2 ? bit_ == 0 : rat_ == 0;
}

bool FieldElement::is_one() const {
  return field_ == Field::gf2 ? bit_ == 1 : rat_ == 1;
}

int FieldElement::bit() const {
  if (field_ != Field::gf2) throw std::logic_error("bit() on a rational element");
  return bit_;
}

const mpq_class& FieldElement::value() const {
  if (field_ != Field::rational) throw std::logic_error("value() on a GF(2) element");
  return rat_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_ == Field::gf2) return FieldElement::gf2(a.bit_ ^ b.bit_);
  return FieldElement::rational(mpq_class(a.rat_ + b.rat_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_ == Field::gf2) return FieldElement::gf2(a.bit_ ^ b.bit_);
  return FieldElement::rational(mpq_class(a.rat_ - b.rat_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_ == Field::gf2) return FieldElement::gf2(a.bit_ & b.bit_);
  return FieldElement::rational(mpq_class(a.rat_ * b.rat_));
}

FieldElement FieldElement::operator-() const {
  if (field_ == Field::gf2) return *this;  // char 2
  return FieldElement::rational(mpq_class(-rat_));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in field inverse");
  if (field_ == Field::gf2) return *this;
  return FieldElement::rational(mpq_class(1 / rat_));
}

bool FieldElement::operator==(const FieldElement& b) const {
  if (field_ != b.field_) return false;
  return field_ == Field::gf2 ? bit_ == b.bit_ : rat_ == b.rat_;
}

int FieldElement::canonical_cmp(const FieldElement& b) const {
  if (field_ != b.field_) return field_ < b.field_ ? -1 : 1;
  if (field_ == Field::gf2) return bit_ - b.bit_;
  return cmp(rat_, b.rat_);
}

std::string FieldElement::str() const {
  if (field_ == Field::gf2) return bit_ ? "1" : "0";
  return rat_.get_str();
}

}  // namespace truncgb
