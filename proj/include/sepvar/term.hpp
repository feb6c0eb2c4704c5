#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sepvar {

/// Power product x1^e1 * ... * xn^en over a fixed number of indeterminates.
class Term {
 public:
  using Exponent = std::uint32_t;

  Term() = default;
  explicit Term(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Term(std::vector<Exponent> exps);

  static Term one(std::size_t nvars) { return Term(nvars); }
  static Term variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }

  bool is_one() const { return degree_ == 0; }
  bool is_variable(std::size_t index) const { return degree_ == 1 && exps_[index] == 1; }
  /// Index of the indeterminate if this term has degree 1.
  std::size_t variable_index() const;
  bool is_squarefree() const;
  /// Replace every positive exponent by 1.
  Term squarefree() const;

  bool divides(const Term& other) const;
  /// other / *this; requires divides(other).
  Term quotient_of(const Term& other) const;
  Term lcm(const Term& other) const;
  bool coprime(const Term& other) const;
  /// True if some index in `indices` has a positive exponent.
  bool divisible_by_any(std::span<const std::size_t> indices) const;

  Term operator*(const Term& other) const;
  Term times_variable(std::size_t index) const;

  friend bool operator==(const Term& a, const Term& b) { return a.exps_ == b.exps_; }
  /// Lexicographic with x1 > x2 > ... > xn.
  friend std::strong_ordering lex_compare(const Term& a, const Term& b);

  std::size_t hash() const;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Orders terms lex-descending; the storage order of polynomials.
struct LexGreater {
  bool operator()(const Term& a, const Term& b) const { return lex_compare(a, b) > 0; }
};

}  // namespace sepvar
