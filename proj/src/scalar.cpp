#include "sepvar/scalar.hpp"

#include <stdexcept>

namespace sepvar {

std::string to_string(Field field) { return field == Field::Q ? "Q" : "F2"; }

Scalar::Scalar(Field field, long value) : field_(field), value_(value) { normalize(); }

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(value) {
  normalize();
}

void Scalar::normalize() {
  value_.canonicalize();
  if (field_ == Field::F2) {
    if (value_.get_den() % 2 == 0) throw std::domain_error("denominator is zero mod 2");
    // a/b with b odd is a mod 2
    mpz_class r = value_.get_num() % 2;
    value_ = (r == 0) ? 0 : 1;
  }
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator-() const {
  if (field_ == Field::F2) return *this;
  Scalar r(*this);
  r.value_ = -r.value_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_ == Field::F2) {
    value_ = (value_ != other.value_) ? 1 : 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (field_ == Field::F2) return *this += other;
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Scalar Scalar::inverse() const { return one(field_) / *this; }

std::string Scalar::to_string() const { return value_.get_str(); }

}  // namespace sepvar
