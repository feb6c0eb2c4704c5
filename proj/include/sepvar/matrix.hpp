#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sepvar/polynomial.hpp"
#include "sepvar/scalar.hpp"

namespace sepvar {

/// Dense row-major matrix over Q or GF(2). GF(2) rows are bit-packed.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  bool is_zero(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;

  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix transposed() const;
  /// Stacks `other` below this matrix; column counts must agree.
  Matrix stacked(const Matrix& other) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  friend class Elimination;

  std::uint64_t* bit_row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* bit_row(std::size_t r) const { return bits_.data() + r * words_; }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<mpq_class> values_;
};

/// R = N * M with R in reduced row echelon form without zero rows.
struct EchelonResult {
  Matrix reduced;
  /// rank x rows(M); empty (0 x 0) when not requested.
  Matrix transform;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination: leftmost nonzero column, first eligible row.
EchelonResult rref(const Matrix& m, bool track_transform = true);

std::size_t rank(const Matrix& m);

/// Rows form a basis of the right kernel {v : A v = 0}; one row per
/// non-pivot column, with a 1 in that column.
Matrix kernel_basis(const Matrix& a);

/// Terms labelling matrix columns, with reverse lookup.
class TermIndex {
 public:
  TermIndex() = default;
  explicit TermIndex(std::vector<Term> terms);

  std::size_t size() const { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Returns size() when absent.
  std::size_t find(const Term& t) const;

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
};

/// Union of the supports, in lex-descending order.
std::vector<Term> combined_support(std::span<const Polynomial> polys);

/// Row i holds the coefficients of polys[i] w.r.t. the indexed terms; every
/// support term must be indexed.
Matrix coefficient_matrix(std::span<const Polynomial> polys, const TermIndex& columns,
                          Field field);

Polynomial row_polynomial(const Matrix& m, std::size_t row, const TermIndex& columns,
                          const RingPtr& ring);
std::vector<Polynomial> row_polynomials(const Matrix& m, const TermIndex& columns,
                                        const RingPtr& ring);

/// result[k] = sum_j coeffs(k, j) * polys[j].
std::vector<Polynomial> combine(const Matrix& coeffs, std::span<const Polynomial> polys,
                                const RingPtr& ring);

}  // namespace sepvar
