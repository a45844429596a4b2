#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace truncgb {

/// Coefficient domains supported by the library.
enum class Field : std::uint8_t { gf2, rational };

std::string to_string(Field f);

/// An exact element of GF(2) or of Q (arbitrary-precision rational).
///
/// Rationals are kept canonical at all times: lowest terms, positive
/// denominator, zero stored as 0/1. Elements of different fields never mix;
/// every binary operation checks and throws std::invalid_argument on a
/// field mismatch.
class FieldElement {
 public:
  static FieldElement gf2(int value) { return FieldElement(Field::gf2, value); }
  static FieldElement rational(mpq_class value);
  static FieldElement rational(const mpz_class& num, const mpz_class& den);
  static FieldElement zero(Field f) { return from_int(f, 0); }
  static FieldElement one(Field f) { return from_int(f, 1); }
  /// Integer reduced into the field (mod 2 for GF(2), exact for Q).
  static FieldElement from_int(Field f, long value);
  static FieldElement from_integer(Field f, const mpz_class& value);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// GF(2) payload as 0/1; only valid when field() == gf2.
  int bit() const;
  /// Rational payload; only valid when field() == rational.
  const mpq_class& value() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

  /// Total order used only for canonical tie-breaking, not field structure.
  int canonical_cmp(const FieldElement& b) const;

  /// Text form: "0"/"1" for GF(2); "n" or "p/q" for Q.
  std::string str() const;

 private:
  FieldElement(Field f, int bit) : field_(f), bit_(bit & 1) {}
  explicit FieldElement(mpq_class q) : field_(Field::rational), rat_(std::move(q)) {}

  Field field_ = Field::gf2;
  int bit_ = 0;
  mpq_class rat_;
};

}  // namespace truncgb
