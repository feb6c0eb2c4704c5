#include "sepvar/gboracle.hpp"

#include <algorithm>

#include "sepvar/boolring.hpp"

namespace sepvar {

namespace {

Polynomial monic(const Polynomial& f, const TermOrdering& ord) {
  return f.scaled(leading_monomial(ord, f).coeff.inverse());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
  Monomial lf = leading_monomial(ord, f);
  Monomial lg = leading_monomial(ord, g);
  Term l = lf.term.lcm(lg.term);
  Polynomial s = f.times_term(lf.term.quotient_of(l), lf.coeff.inverse());
  s.add_multiple(g, lg.term.quotient_of(l), -lg.coeff.inverse());
  return s;
}

struct Pair {
  std::size_t i, j;
  std::uint64_t degree;
};

}  // namespace

bool GroebnerBasis::is_unit() const {
  return polys.size() == 1 && polys[0].size() == 1 && polys[0].monomials()[0].term.is_one();
}

GroebnerBasis buchberger(const PolySystem& sys, const TermOrdering& ord,
                         const OracleLimits& limits) {
  PolySystem work = sys.ring()->boolean()
                        ? bool_working_system(sys, BoolCheckMode::OptimizedWithFieldIdeal)
                        : sys;
  const RingPtr ring = work.ring();
  if (ord.size() != ring->size()) throw std::invalid_argument("ordering dimension mismatch");

  std::vector<Polynomial> g;
  std::vector<Term> lt;
  std::vector<Pair> pairs;
  GroebnerBasis out{ring, ord, {}};
  auto add = [&](Polynomial p) {
    p = monic(p, ord);
    if (p.degree() > limits.max_degree) throw OracleOverloaded("degree guard");
    Term t = leading_monomial(ord, p).term;
    for (std::size_t k = 0; k < g.size(); ++k) pairs.push_back({k, g.size(), t.lcm(lt[k]).degree()});
    g.push_back(std::move(p));
    lt.push_back(std::move(t));
    if (g.size() > limits.max_basis) throw OracleOverloaded("basis size guard");
  };

  for (const auto& f : work.generators()) {
    if (f.is_zero()) continue;
    Polynomial r = normal_remainder(f, g, ord);
    if (r.is_zero()) continue;
    if (r.degree() == 0) {
      out.polys = {Polynomial::constant(ring, 1)};
      return out;
    }
    add(std::move(r));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree, then first pair
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    pairs.erase(best);
    if (++processed > limits.max_pairs) throw OracleOverloaded("pair guard");
    if (lt[p.i].coprime(lt[p.j])) continue;
    Polynomial r = normal_remainder(s_polynomial(g[p.i], g[p.j], ord), g, ord);
    if (r.is_zero()) continue;
    if (r.degree() == 0) {
      out.polys = {Polynomial::constant(ring, 1)};
      return out;
    }
    add(std::move(r));
  }

  // minimize, then interreduce
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < g.size() && !redundant; ++m) {
      if (m == k || !lt[m].divides(lt[k])) continue;
      redundant = lt[m] != lt[k] || m < k;
    }
    if (!redundant) keep.push_back(k);
  }
  std::vector<Polynomial> minimal;
  for (std::size_t k : keep) minimal.push_back(g[k]);
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    Monomial lead = leading_monomial(ord, minimal[k]);
    Polynomial tail = minimal[k] - Polynomial::monomial(ring, lead.term, lead.coeff);
    minimal[k] = Polynomial::monomial(ring, lead.term, lead.coeff) +
                 normal_remainder(tail, others, ord);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(leading_monomial(ord, a).term, leading_monomial(ord, b).term);
  });
  out.polys = std::move(minimal);
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.ring()->boolean()) {
    Polynomial r = normal_remainder(f.in_ring(gb.ring), gb.polys, gb.ordering);
    return squarefree_normalize(r);
  }
  return normal_remainder(f, gb.polys, gb.ordering);
}

TermOrdering elimination_ordering(std::size_t nvars, const IndexTuple& z) {
  IntMatrix rows;
  for (std::size_t zi : z) {
    std::vector<mpz_class> r(nvars, mpz_class(0));
    r[zi] = 1;
    rows.push_back(std::move(r));
  }
  std::vector<mpz_class> degree(nvars, mpz_class(1));
  for (std::size_t zi : z) degree[zi] = 0;
  rows.push_back(std::move(degree));
  for (std::size_t k = nvars; k-- > 0;) {
    if (z.contains(k)) continue;
    std::vector<mpz_class> r(nvars, mpz_class(0));
    r[k] = -1;
    rows.push_back(std::move(r));
  }
  return TermOrdering::matrix(std::move(rows));
}

bool oracle_is_separating(const PolySystem& sys, const IndexTuple& z,
                          const OracleLimits& limits) {
  const std::size_t n = sys.ring()->size();
  GroebnerBasis gb = buchberger(sys, elimination_ordering(n, z), limits);
  if (gb.is_unit()) return false;
  for (std::size_t zi : z) {
    const Term t = Term::variable(n, zi);
    bool found = false;
    for (const auto& p : gb.polys)
      if (leading_monomial(gb.ordering, p).term == t) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace sepvar
