#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepvar/ring.hpp"
#include "sepvar/scalar.hpp"
#include "sepvar/term.hpp"

namespace sepvar {

struct Monomial {
  Term term;
  Scalar coeff;
};

/// Sparse polynomial: distinct terms with nonzero coefficients, stored
/// lex-descending. In a boolean-mode ring every stored term is square-free;
/// products are reduced as soon as they are formed.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Merges repeated terms and drops zero coefficients.
  static Polynomial from_monomials(RingPtr ring, std::vector<Monomial> monomials);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Term term, Scalar coeff);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->size(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Monomial> monomials() const { return terms_; }
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;
  Scalar coefficient(const Term& t) const;
  Scalar constant_term() const;
  /// True iff this polynomial is exactly the indeterminate x_index.
  bool is_variable(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Term& t, const Scalar& c) const;
  Polynomial times_variable(std::size_t index) const;
  Polynomial pow(unsigned exponent) const;
  /// Adds c * t * other to this polynomial.
  void add_multiple(const Polynomial& other, const Term& t, const Scalar& c);

  /// Simultaneous substitution x_k -> images[k] for every k with an image.
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images) const;
  /// Same coefficients and exponents viewed in another ring over the same
  /// field and number of indeterminates (e.g. to leave boolean-mode).
  Polynomial in_ring(const RingPtr& target) const;

  /// E.g. "x1^2*x3 - 2*x2 + 1/3"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;
  Polynomial combine(const Polynomial& other, bool subtract) const;

  RingPtr ring_;
  std::vector<Monomial> terms_;
};

/// Homogeneous component of degree 1.
Polynomial linear_part(const Polynomial& f);

/// Drops every monomial whose term is divisible by none of the indeterminates
/// in `indices`.
Polynomial restrict_to_multiples(const Polynomial& f, std::span<const std::size_t> indices);

std::string term_to_string(const Term& t, const Ring& ring);

}  // namespace sepvar
