#include "sepvar/sepextract.hpp"

#include <algorithm>
#include <optional>

#include "sepvar/matrix.hpp"

namespace sepvar {

NoRowWithLeadingTerm::NoRowWithLeadingTerm(std::size_t variable)
    : std::runtime_error("no row has leading term x" + std::to_string(variable + 1)),
      variable_(variable) {}

TermOrdering compatible_ordering(const WeightVector& w, const IndexTuple& z) {
  const std::size_t n = w.size();
  IntMatrix rows;
  std::vector<mpz_class> degree(n, mpz_class(1));
  for (std::size_t zi : z) degree[zi] = 0;
  rows.push_back(std::move(degree));
  for (std::size_t k = n; k-- > 0;) {
    std::vector<mpz_class> r(n, mpz_class(0));
    r[k] = -1;
    rows.push_back(std::move(r));
  }
  return TermOrdering::weighted(w, TermOrdering::tiebreak_matrix(std::move(rows)));
}

SeparatingTuple find_separating_tuple(const PolySystem& sys, const IndexTuple& z,
                                      const TermOrdering& sigma) {
  const RingPtr& ring = sys.ring();
  const std::size_t n = ring->size();
  std::vector<Polynomial> gs = sys.normalized().generators();
  std::vector<Term> terms = combined_support(gs);
  sigma.sort_descending(terms);
  TermIndex index(std::move(terms));
  EchelonResult e = rref(coefficient_matrix(gs, index, ring->field()), false);

  SeparatingTuple out{{}, sigma};
  for (std::size_t zi : z) {
    const Term t = Term::variable(n, zi);
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < e.rank(); ++r)
      if (index[e.pivots[r]] == t) row = r;
    if (!row) throw NoRowWithLeadingTerm(zi);
    out.entries.push_back({zi, row_polynomial(e.reduced, *row, index, ring)});
  }
  return out;
}

SeparatingTuple find_separating_tuple_tracked(const PolySystem& sys, const IndexTuple& z,
                                              const OptimizedOptions& options) {
  TrackedCheck t = check_separating_tracked(sys, z, true, options);
  if (!t.outcome.success) throw OptimizedCheckFailed();
  SeparatingTuple out{{}, compatible_ordering(t.outcome.weights, z)};
  for (std::size_t i = 0; i < z.size(); ++i) out.entries.push_back({z[i], *t.separating[i]});
  return out;
}

CoherentTuple coherent_tuple(const SeparatingTuple& sep, const IndexTuple& z) {
  CoherentTuple out;
  if (sep.entries.empty()) return out;
  const RingPtr& ring = sep.entries[0].f.ring();
  const std::size_t n = ring->size();
  std::vector<SeparatingEntry> order = sep.entries;
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return sep.ordering.compare(Term::variable(n, a.variable), Term::variable(n, b.variable)) < 0;
  });
  std::vector<std::optional<Polynomial>> images(n);
  for (const auto& entry : order) {
    Polynomial zi = Polynomial::variable(ring, entry.variable);
    Polynomial h = (zi - entry.f).substitute(images);
    for (const auto& m : h.monomials())
      if (m.term.divisible_by_any(z.indices()))
        throw std::logic_error("separating tuple is not triangular under its ordering");
    out.entries.push_back({entry.variable, zi - h});
    images[entry.variable] = std::move(h);
  }
  return out;
}

EliminatedSystem eliminate(const PolySystem& sys, const CoherentTuple& coh) {
  const RingPtr& ring = sys.ring();
  const std::size_t n = ring->size();
  std::vector<std::optional<Polynomial>> images(n);
  for (const auto& entry : coh.entries)
    images[entry.variable] = Polynomial::variable(ring, entry.variable) - entry.f;

  std::vector<std::size_t> kept;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    if (images[k]) continue;
    kept.push_back(k);
    names.push_back(ring->name(k));
  }
  if (kept.empty()) throw std::invalid_argument("cannot eliminate every indeterminate");
  RingPtr small = Ring::make(kept.size(), ring->field(), names, ring->boolean());

  PolySystem out(small);
  for (const auto& g : sys.generators()) {
    Polynomial s = g.substitute(images);
    std::vector<Monomial> ms;
    for (const auto& m : s.monomials()) {
      for (const auto& entry : coh.entries)
        if (m.term[entry.variable] != 0) throw std::invalid_argument("tuple is not coherent");
      std::vector<Term::Exponent> exps(kept.size());
      for (std::size_t k = 0; k < kept.size(); ++k) exps[k] = m.term[kept[k]];
      ms.push_back({Term(std::move(exps)), m.coeff});
    }
    out.add(Polynomial::from_monomials(small, std::move(ms)));
  }
  return {std::move(out), std::move(kept)};
}

}  // namespace sepvar
