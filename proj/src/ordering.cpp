#include "sepvar/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sepvar {

namespace {

void check_dims(std::size_t n, const Term& t, const Term& u) {
  if (t.size() != n || u.size() != n)
    throw std::invalid_argument("term dimension does not match the ordering");
}

mpz_class dot(const std::vector<mpz_class>& row, const Term& t) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (t[i] != 0 && sgn(row[i]) != 0) s += row[i] * t[i];
  return s;
}

std::strong_ordering cmp(const mpz_class& a, const mpz_class& b) {
  int c = ::cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::size_t integer_rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t ncols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

TermOrdering TermOrdering::lex(std::size_t nvars) { return TermOrdering(Kind::Lex, nvars); }

TermOrdering TermOrdering::deg_rev_lex(std::size_t nvars) {
  return TermOrdering(Kind::DegRevLex, nvars);
}

TermOrdering TermOrdering::weighted(WeightVector weights, TermOrdering tiebreak) {
  if (weights.size() != tiebreak.size())
    throw std::invalid_argument("weight vector and tiebreak ordering differ in size");
  for (const auto& w : weights)
    if (sgn(w) < 0) throw std::invalid_argument("weights must be non-negative");
  TermOrdering o(Kind::Weighted, weights.size());
  o.weights_ = std::move(weights);
  o.inner_ = std::make_shared<const TermOrdering>(std::move(tiebreak));
  return o;
}

TermOrdering TermOrdering::tiebreak_matrix(IntMatrix rows) {
  if (rows.empty()) throw std::invalid_argument("ordering matrix has no rows");
  const std::size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("ordering matrix rows differ in length");
  if (integer_rank(rows) != n) throw std::invalid_argument("ordering matrix is not of full rank");
  TermOrdering o(Kind::Matrix, n);
  o.rows_ = std::move(rows);
  return o;
}

TermOrdering TermOrdering::matrix(IntMatrix rows) {
  TermOrdering o = tiebreak_matrix(std::move(rows));
  for (std::size_t c = 0; c < o.nvars_; ++c) {
    for (const auto& r : o.rows_) {
      if (sgn(r[c]) == 0) continue;
      if (sgn(r[c]) < 0)
        throw std::invalid_argument("ordering matrix puts x" + std::to_string(c + 1) +
                                    " below 1");
      break;
    }
  }
  return o;
}

std::strong_ordering TermOrdering::compare(const Term& t, const Term& u) const {
  check_dims(nvars_, t, u);
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(t, u);
    case Kind::DegRevLex: {
      if (t.degree() != u.degree()) return t.degree() <=> u.degree();
      for (std::size_t i = nvars_; i-- > 0;) {
        if (t[i] != u[i]) return u[i] <=> t[i];
      }
      return std::strong_ordering::equal;
    }
    case Kind::Weighted: {
      auto c = cmp(weight_of(weights_, t), weight_of(weights_, u));
      if (c != 0) return c;
      return inner_->compare(t, u);
    }
    case Kind::Matrix: {
      for (const auto& r : rows_) {
        auto c = cmp(dot(r, t), dot(r, u));
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

void TermOrdering::sort_descending(std::vector<Term>& terms) const {
  if (kind_ == Kind::Lex || kind_ == Kind::DegRevLex) {
    std::sort(terms.begin(), terms.end(),
              [this](const Term& a, const Term& b) { return compare(a, b) > 0; });
    return;
  }
  // Precompute the leading key (weight or first row) once per term.
  const auto& key_row = kind_ == Kind::Weighted ? weights_ : rows_.front();
  std::vector<std::pair<mpz_class, std::size_t>> keys;
  keys.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) keys.emplace_back(dot(key_row, terms[i]), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    int c = ::cmp(a.first, b.first);
    if (c != 0) return c > 0;
    return compare(terms[a.second], terms[b.second]) > 0;
  });
  std::vector<Term> sorted;
  sorted.reserve(terms.size());
  for (const auto& k : keys) sorted.push_back(std::move(terms[k.second]));
  terms = std::move(sorted);
}

std::strong_ordering compare_terms(const TermOrdering& ord, const Term& t, const Term& u) {
  return ord.compare(t, u);
}

mpz_class weight_of(const WeightVector& w, const Term& t) {
  if (w.size() != t.size()) throw std::invalid_argument("weight vector has wrong length");
  return dot(w, t);
}

Monomial leading_monomial(const TermOrdering& ord, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  auto ms = f.monomials();
  const Monomial* best = &ms[0];
  for (const auto& m : ms.subspan(1))
    if (ord.compare(m.term, best->term) > 0) best = &m;
  return *best;
}

}  // namespace sepvar
