#include "sepvar/reduce.hpp"

#include <algorithm>
#include <unordered_set>

#include "sepvar/ordering.hpp"

namespace sepvar {

std::vector<Polynomial> InterreductionResult::all() const {
  std::vector<Polynomial> out = heads;
  out.insert(out.end(), tails.begin(), tails.end());
  return out;
}

InterreductionResult linear_interreduce(std::span<const Polynomial> gs, const IndexTuple& z) {
  if (gs.empty()) {
    if (!z.empty()) throw HypothesisError("linear parts span a space smaller than #Z");
    return {{}, {}, Matrix(Field::Q, 0, 0)};
  }
  const RingPtr& ring = gs[0].ring();
  const std::size_t n = ring->size();
  const std::size_t s = z.size();

  // columns: z1..zs, then the rest lex-descending
  std::vector<Term> columns;
  for (std::size_t zi : z) columns.push_back(Term::variable(n, zi));
  for (const Term& t : combined_support(gs)) {
    if (!t.divisible_by_any(z.indices()))
      throw HypothesisError("support term not divisible by an indeterminate of Z");
    if (t.degree() == 1) {
      if (!z.contains(t.variable_index()))
        throw HypothesisError("support term not divisible by an indeterminate of Z");
      continue;
    }
    columns.push_back(t);
  }
  TermIndex index(std::move(columns));
  EchelonResult e = rref(coefficient_matrix(gs, index, ring->field()), true);

  std::size_t linear_pivots = 0;
  while (linear_pivots < e.rank() && e.pivots[linear_pivots] < s) ++linear_pivots;
  if (linear_pivots != s) throw HypothesisError("linear parts span a space of dimension != #Z");

  InterreductionResult res{{}, {}, std::move(e.transform)};
  std::vector<Polynomial> rows = row_polynomials(e.reduced, index, ring);
  res.heads.assign(rows.begin(), rows.begin() + s);
  res.tails.assign(rows.begin() + s, rows.end());
  return res;
}

namespace {

struct PolyHash {
  std::size_t operator()(const Polynomial* p) const {
    std::size_t h = p->size();
    for (const auto& m : p->monomials()) h = h * 31 + m.term.hash();
    return h;
  }
};
struct PolyEq {
  bool operator()(const Polynomial* a, const Polynomial* b) const { return *a == *b; }
};

void build_products(std::span<const Polynomial> gs, const IndexTuple& z, Extension& ext) {
  const std::size_t n = gs.empty() ? 0 : gs[0].nvars();
  for (std::size_t i = 0; i < n; ++i) {
    if (z.contains(i)) continue;
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (gs[j].is_zero()) continue;
      ext.products.push_back(gs[j].times_variable(i));
      ext.origins.emplace_back(i, j);
    }
  }
  // identical products span nothing new
  std::unordered_set<const Polynomial*, PolyHash, PolyEq> seen;
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < ext.products.size(); ++p)
    if (seen.insert(&ext.products[p]).second) keep.push_back(p);
  if (keep.size() == ext.products.size()) return;
  std::vector<Polynomial> products;
  std::vector<std::pair<std::size_t, std::size_t>> origins;
  for (std::size_t p : keep) {
    products.push_back(std::move(ext.products[p]));
    origins.push_back(ext.origins[p]);
  }
  ext.products = std::move(products);
  ext.origins = std::move(origins);
}

void kernel_of_high_terms(std::uint64_t delta, const RingPtr& ring, Extension& ext) {
  const Field f = ring->field();
  std::vector<Term> high;
  for (const Term& t : combined_support(ext.products))
    if (t.degree() > delta) high.push_back(t);
  TermIndex hindex(std::move(high));
  Matrix a(f, hindex.size(), ext.products.size());
  for (std::size_t p = 0; p < ext.products.size(); ++p)
    for (const auto& m : ext.products[p].monomials()) {
      std::size_t r = hindex.find(m.term);
      if (r != hindex.size()) a.set(r, p, m.coeff);
    }
  Matrix v = kernel_basis(a);
  std::vector<Polynomial> qs = combine(v, ext.products, ring);
  // kernel vectors may give dependent q's; reduce them to a basis
  TermIndex qindex(combined_support(qs));
  EchelonResult e = rref(coefficient_matrix(qs, qindex, f), true);
  ext.coefficients = e.transform * v;
  ext.basis = row_polynomials(e.reduced, qindex, ring);
}

void echelon_scan(std::uint64_t delta, const RingPtr& ring, Extension& ext) {
  const Field f = ring->field();
  std::vector<Term> terms = combined_support(ext.products);
  TermOrdering::deg_rev_lex(ring->size()).sort_descending(terms);
  TermIndex index(std::move(terms));
  EchelonResult e = rref(coefficient_matrix(ext.products, index, f), true);
  std::vector<std::size_t> low;
  for (std::size_t r = 0; r < e.rank(); ++r)
    if (index[e.pivots[r]].degree() <= delta) low.push_back(r);
  ext.coefficients = e.transform.select_rows(low);
  ext.basis.clear();
  for (std::size_t r : low) ext.basis.push_back(row_polynomial(e.reduced, r, index, ring));
}

}  // namespace

Extension degree_bounded_extension(std::span<const Polynomial> gs, const IndexTuple& z,
                                   std::uint64_t delta, ExtensionMethod method) {
  Extension ext{{}, {}, Matrix(Field::Q, 0, 0), {}};
  build_products(gs, z, ext);
  if (ext.products.empty()) {
    if (!gs.empty()) ext.coefficients = Matrix(gs[0].field(), 0, 0);
    return ext;
  }
  const RingPtr& ring = gs[0].ring();
  if (method == ExtensionMethod::KernelOfHighTerms) {
    kernel_of_high_terms(delta, ring, ext);
  } else {
    echelon_scan(delta, ring, ext);
  }
  return ext;
}

}  // namespace sepvar
