#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sepvar {

/// Coefficient field of a polynomial ring.
enum class Field : std::uint8_t { Q, F2 };

std::string to_string(Field field);

/// Exact field element: a reduced rational, or a bit of GF(2).
///
/// Rational values are kept canonical (gcd 1, positive denominator). GF(2)
/// values are stored as 0/1 and all arithmetic is taken mod 2. Mixing
/// scalars of different fields throws std::invalid_argument.
class Scalar {
 public:
  explicit Scalar(Field field = Field::Q) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_minus_one() const { return field_ == Field::Q && value_ == -1; }
  bool is_negative() const { return sgn(value_) < 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// "3", "-1/2"; GF(2) prints as "0" or "1".
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;
  void normalize();

  Field field_;
  mpq_class value_;
};

}  // namespace sepvar
