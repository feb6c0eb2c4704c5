#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sepvar/polynomial.hpp"
#include "sepvar/term.hpp"

namespace sepvar {

using WeightVector = std::vector<mpz_class>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// A term ordering on n indeterminates: lex (x1 > ... > xn), degrevlex,
/// a weight vector refined by an inner ordering, or a matrix ordering
/// (image vectors compared row by row).
class TermOrdering {
 public:
  enum class Kind { Lex, DegRevLex, Weighted, Matrix };

  static TermOrdering lex(std::size_t nvars);
  static TermOrdering deg_rev_lex(std::size_t nvars);
  /// Compares W-weights first, then `tiebreak`.
  static TermOrdering weighted(WeightVector weights, TermOrdering tiebreak);
  /// Rows must have n columns, rank n, and the first nonzero entry of every
  /// column must be positive (so that 1 < x_k). Throws std::invalid_argument.
  static TermOrdering matrix(IntMatrix rows);
  /// Matrix rows used only as a tiebreak after a weight row: requires rank n
  /// but not positivity.
  static TermOrdering tiebreak_matrix(IntMatrix rows);

  Kind kind() const { return kind_; }
  std::size_t size() const { return nvars_; }
  const WeightVector& weights() const { return weights_; }
  const IntMatrix& rows() const { return rows_; }
  const TermOrdering* tiebreak() const { return inner_.get(); }

  /// Throws std::invalid_argument on a dimension mismatch.
  std::strong_ordering compare(const Term& t, const Term& u) const;
  bool greater(const Term& t, const Term& u) const { return compare(t, u) > 0; }

  /// Sorts terms into descending order.
  void sort_descending(std::vector<Term>& terms) const;

 private:
  TermOrdering(Kind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  Kind kind_;
  std::size_t nvars_;
  WeightVector weights_;
  IntMatrix rows_;
  std::shared_ptr<const TermOrdering> inner_;
};

std::strong_ordering compare_terms(const TermOrdering& ord, const Term& t, const Term& u);

mpz_class weight_of(const WeightVector& w, const Term& t);

/// The ord-maximal monomial of f. Throws std::invalid_argument for f == 0.
Monomial leading_monomial(const TermOrdering& ord, const Polynomial& f);
inline std::pair<Term, Scalar> leading_term(const TermOrdering& ord, const Polynomial& f) {
  Monomial m = leading_monomial(ord, f);
  return {std::move(m.term), std::move(m.coeff)};
}

/// Rank of an integer matrix (computed over Q).
std::size_t integer_rank(const IntMatrix& rows);

}  // namespace sepvar
