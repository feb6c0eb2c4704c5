#include "sepvar/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepvar {

namespace {

constexpr std::size_t kWordBits = 64;

inline bool test_bit(const std::uint64_t* row, std::size_t c) {
  return (row[c / kWordBits] >> (c % kWordBits)) & 1u;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_ == Field::F2) {
    words_ = (cols + kWordBits - 1) / kWordBits;
    bits_.assign(rows * words_, 0);
  } else {
    values_.assign(rows * cols, mpq_class(0));
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_ == Field::F2) return Scalar(field_, test_bit(bit_row(r), c) ? 1L : 0L);
  return Scalar(field_, values_[r * cols_ + c]);
}

bool Matrix::is_zero(std::size_t r, std::size_t c) const {
  if (field_ == Field::F2) return !test_bit(bit_row(r), c);
  return sgn(values_[r * cols_ + c]) == 0;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (v.field() != field_) throw std::invalid_argument("scalar from wrong field");
  if (field_ == Field::F2) {
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (v.is_zero()) {
      bit_row(r)[c / kWordBits] &= ~mask;
    } else {
      bit_row(r)[c / kWordBits] |= mask;
    }
  } else {
    values_[r * cols_ + c] = v.value();
  }
}

bool Matrix::row_is_zero(std::size_t r) const {
  if (field_ == Field::F2) {
    const auto* row = bit_row(r);
    return std::all_of(row, row + words_, [](std::uint64_t w) { return w == 0; });
  }
  for (std::size_t c = 0; c < cols_; ++c)
    if (sgn(values_[r * cols_ + c]) != 0) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (!row_is_zero(r)) return false;
  return true;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (field_ == Field::F2) {
      std::copy_n(bit_row(rows[i]), words_, m.bit_row(i));
    } else {
      std::copy_n(values_.begin() + rows[i] * cols_, cols_, m.values_.begin() + i * cols_);
    }
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_zero(r, c)) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (other.field_ != field_ || other.cols_ != cols_)
    throw std::invalid_argument("cannot stack matrices of different shape");
  Matrix m(field_, rows_ + other.rows_, cols_);
  m.bits_ = bits_;
  m.bits_.insert(m.bits_.end(), other.bits_.begin(), other.bits_.end());
  m.values_ = values_;
  m.values_.insert(m.values_.end(), other.values_.begin(), other.values_.end());
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  if (a.field_ == Field::F2) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::uint64_t* out = c.bit_row(i);
      const std::uint64_t* arow = a.bit_row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!test_bit(arow, k)) continue;
        const std::uint64_t* brow = b.bit_row(k);
        for (std::size_t w = 0; w < b.words_; ++w) out[w] ^= brow[w];
      }
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& x = a.values_[i * a.cols_ + k];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const mpq_class& y = b.values_[k * b.cols_ + j];
        if (sgn(y) != 0) c.values_[i * c.cols_ + j] += x * y;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.bits_ == b.bits_ && a.values_ == b.values_;
}

class Elimination {
 public:
  static EchelonResult run(const Matrix& m, bool track) {
    return m.field() == Field::F2 ? run_f2(m, track) : run_q(m, track);
  }

 private:
  static EchelonResult run_f2(const Matrix& m, bool track) {
    Matrix r = m;
    Matrix n = track ? Matrix::identity(Field::F2, m.rows()) : Matrix(Field::F2, 0, 0);
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    const std::size_t rw = r.words_;
    const std::size_t nw = n.words_;
    for (std::size_t c = 0; c < r.cols() && rank < r.rows(); ++c) {
      std::size_t p = rank;
      while (p < r.rows() && !test_bit(r.bit_row(p), c)) ++p;
      if (p == r.rows()) continue;
      if (p != rank) {
        std::swap_ranges(r.bit_row(p), r.bit_row(p) + rw, r.bit_row(rank));
        if (track) std::swap_ranges(n.bit_row(p), n.bit_row(p) + nw, n.bit_row(rank));
      }
      const std::uint64_t* prow = r.bit_row(rank);
      const std::uint64_t* pn = track ? n.bit_row(rank) : nullptr;
      const std::size_t w0 = c / kWordBits;
      for (std::size_t i = 0; i < r.rows(); ++i) {
        if (i == rank || !test_bit(r.bit_row(i), c)) continue;
        std::uint64_t* row = r.bit_row(i);
        for (std::size_t w = w0; w < rw; ++w) row[w] ^= prow[w];
        if (track) {
          std::uint64_t* nrow = n.bit_row(i);
          for (std::size_t w = 0; w < nw; ++w) nrow[w] ^= pn[w];
        }
      }
      pivots.push_back(c);
      ++rank;
    }
    std::vector<std::size_t> keep(rank);
    for (std::size_t i = 0; i < rank; ++i) keep[i] = i;
    EchelonResult res{r.select_rows(keep),
                      track ? n.select_rows(keep) : Matrix(Field::F2, 0, 0), std::move(pivots)};
    return res;
  }

  static EchelonResult run_q(const Matrix& m, bool track) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<mpq_class>> r(rows);
    for (std::size_t i = 0; i < rows; ++i)
      r[i].assign(m.values_.begin() + i * cols, m.values_.begin() + (i + 1) * cols);
    std::vector<std::vector<mpq_class>> n;
    if (track) {
      n.assign(rows, std::vector<mpq_class>(rows, mpq_class(0)));
      for (std::size_t i = 0; i < rows; ++i) n[i][i] = 1;
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    std::vector<std::size_t> nz, nnz;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && sgn(r[p][c]) == 0) ++p;
      if (p == rows) continue;
      std::swap(r[p], r[rank]);
      if (track) std::swap(n[p], n[rank]);
      auto& prow = r[rank];
      if (prow[c] != 1) {
        mpq_class inv = 1 / prow[c];
        for (std::size_t j = c; j < cols; ++j)
          if (sgn(prow[j]) != 0) prow[j] *= inv;
        if (track)
          for (auto& x : n[rank])
            if (sgn(x) != 0) x *= inv;
      }
      nz.clear();
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(prow[j]) != 0) nz.push_back(j);
      nnz.clear();
      if (track)
        for (std::size_t j = 0; j < rows; ++j)
          if (sgn(n[rank][j]) != 0) nnz.push_back(j);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == rank || sgn(r[i][c]) == 0) continue;
        mpq_class f = r[i][c];
        for (std::size_t j : nz) r[i][j] -= f * prow[j];
        if (track)
          for (std::size_t j : nnz) n[i][j] -= f * n[rank][j];
      }
      pivots.push_back(c);
      ++rank;
    }
    Matrix reduced(Field::Q, rank, cols);
    for (std::size_t i = 0; i < rank; ++i)
      std::move(r[i].begin(), r[i].end(), reduced.values_.begin() + i * cols);
    Matrix transform(Field::Q, track ? rank : 0, track ? rows : 0);
    if (track)
      for (std::size_t i = 0; i < rank; ++i)
        std::move(n[i].begin(), n[i].end(), transform.values_.begin() + i * rows);
    return {std::move(reduced), std::move(transform), std::move(pivots)};
  }
};

EchelonResult rref(const Matrix& m, bool track_transform) {
  return Elimination::run(m, track_transform);
}

std::size_t rank(const Matrix& m) { return rref(m, false).rank(); }

Matrix kernel_basis(const Matrix& a) {
  EchelonResult e = rref(a, false);
  const Field f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(f, free.size(), a.cols());
  for (std::size_t i = 0; i < free.size(); ++i) {
    k.set(i, free[i], Scalar::one(f));
    for (std::size_t r = 0; r < e.rank(); ++r) {
      if (!e.reduced.is_zero(r, free[i])) k.set(i, e.pivots[r], -e.reduced.at(r, free[i]));
    }
  }
  return k;
}

TermIndex::TermIndex(std::vector<Term> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::size_t TermIndex::find(const Term& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? terms_.size() : it->second;
}

std::vector<Term> combined_support(std::span<const Polynomial> polys) {
  std::vector<Term> terms;
  for (const auto& p : polys)
    for (const auto& m : p.monomials()) terms.push_back(m.term);
  std::sort(terms.begin(), terms.end(), LexGreater{});
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

Matrix coefficient_matrix(std::span<const Polynomial> polys, const TermIndex& columns,
                          Field field) {
  Matrix m(field, polys.size(), columns.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& mono : polys[i].monomials()) {
      std::size_t c = columns.find(mono.term);
      if (c == columns.size()) throw std::logic_error("term missing from column index");
      m.set(i, c, mono.coeff);
    }
  }
  return m;
}

Polynomial row_polynomial(const Matrix& m, std::size_t row, const TermIndex& columns,
                          const RingPtr& ring) {
  std::vector<Monomial> ms;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.is_zero(row, c)) ms.push_back({columns[c], m.at(row, c)});
  return Polynomial::from_monomials(ring, std::move(ms));
}

std::vector<Polynomial> row_polynomials(const Matrix& m, const TermIndex& columns,
                                        const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(row_polynomial(m, r, columns, ring));
  return out;
}

std::vector<Polynomial> combine(const Matrix& coeffs, std::span<const Polynomial> polys,
                                const RingPtr& ring) {
  if (coeffs.cols() != polys.size()) throw std::invalid_argument("combine: shape mismatch");
  TermIndex columns(combined_support(polys));
  Matrix c = coeffs * coefficient_matrix(polys, columns, ring->field());
  return row_polynomials(c, columns, ring);
}

}  // namespace sepvar
