#include "sepvar/boolring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sepvar/matrix.hpp"

namespace sepvar {

RingPtr boolean_ring_of(const RingPtr& ring) {
  if (ring->field() != Field::F2) throw std::invalid_argument("Boolean ring needs field F2");
  return ring->boolean() ? ring : with_boolean_mode(ring, true);
}

Polynomial squarefree_normalize(const Polynomial& f) {
  return f.in_ring(boolean_ring_of(f.ring()));
}

std::vector<Polynomial> field_ideal_generators(const RingPtr& ambient) {
  if (ambient->field() != Field::F2 || ambient->boolean())
    throw std::invalid_argument("field equations live in the non-boolean F2 ring");
  const std::size_t n = ambient->size();
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial x = Polynomial::variable(ambient, k);
    out.push_back(Polynomial::monomial(ambient, Term::variable(n, k, 2), Scalar::one(Field::F2)) +
                  x);
  }
  return out;
}

Polynomial normal_remainder(const Polynomial& f, std::span<const Polynomial> divisors,
                            const TermOrdering& ord) {
  std::vector<Monomial> leads;
  std::vector<const Polynomial*> divs;
  for (const auto& g : divisors) {
    if (g.is_zero()) continue;
    leads.push_back(leading_monomial(ord, g));
    divs.push_back(&g);
  }
  Polynomial p = f;
  std::vector<Monomial> rest;
  while (!p.is_zero()) {
    Monomial lm = leading_monomial(ord, p);
    std::size_t k = 0;
    while (k < leads.size() && !leads[k].term.divides(lm.term)) ++k;
    if (k < leads.size()) {
      p.add_multiple(*divs[k], leads[k].term.quotient_of(lm.term), -(lm.coeff / leads[k].coeff));
    } else {
      p -= Polynomial::monomial(p.ring(), lm.term, lm.coeff);
      rest.push_back(std::move(lm));
    }
  }
  return Polynomial::from_monomials(f.ring(), std::move(rest));
}

Polynomial bool_normal_remainder(const Polynomial& f, std::span<const Polynomial> g,
                                 const TermOrdering& ord) {
  RingPtr ambient = with_boolean_mode(f.ring(), false);
  std::vector<Polynomial> divisors;
  for (const auto& gi : g) divisors.push_back(squarefree_normalize(gi).in_ring(ambient));
  for (auto& h : field_ideal_generators(ambient)) divisors.push_back(std::move(h));
  Polynomial r =
      normal_remainder(squarefree_normalize(f).in_ring(ambient), divisors, ord);
  return squarefree_normalize(r);
}

PolySystem bool_working_system(const PolySystem& sys, BoolCheckMode mode) {
  const RingPtr& ring = sys.ring();
  if (!ring->boolean()) throw std::invalid_argument("expected a boolean-mode system");
  if (mode == BoolCheckMode::Plain) return sys;
  RingPtr ambient = with_boolean_mode(ring, false);
  PolySystem out(ambient);
  for (const auto& g : sys.generators()) out.add(g.in_ring(ambient));
  if (mode == BoolCheckMode::OptimizedWithFieldIdeal)
    for (auto& h : field_ideal_generators(ambient)) out.add(std::move(h));
  return out;
}

CheckOutcome bool_check_separating(const PolySystem& sys, const IndexTuple& z,
                                   BoolCheckMode mode, const OptimizedOptions& options) {
  PolySystem work = bool_working_system(sys, mode);
  return mode == BoolCheckMode::Plain ? check_separating(work, z)
                                      : check_separating_optimized(work, z, options);
}

SeparatingTuple bool_find_separating_tuple(const PolySystem& sys, const IndexTuple& z,
                                           BoolCheckMode mode, const CheckOutcome& outcome,
                                           const OptimizedOptions& options) {
  if (!outcome.success) throw std::invalid_argument("check outcome is not a success");
  PolySystem work = bool_working_system(sys, mode);
  SeparatingTuple sep =
      mode == BoolCheckMode::Plain
          ? find_separating_tuple(work, z, compatible_ordering(outcome.weights, z))
          : find_separating_tuple_tracked(work, z, options);
  for (auto& e : sep.entries) e.f = squarefree_normalize(e.f);
  return sep;
}

PolySystem augment_with_indeterminate_products(const PolySystem& sys, const IndexTuple& z) {
  const RingPtr& ring = sys.ring();
  if (!ring->boolean()) throw std::invalid_argument("expected a boolean-mode system");
  const std::size_t n = ring->size();
  PolySystem out = sys;
  for (const auto& g : sys.generators()) {
    if (!g.constant_term().is_zero()) continue;
    for (std::size_t zi : z)
      if (!g.coefficient(Term::variable(n, zi)).is_zero())
        out.add(squarefree_normalize(g.times_variable(zi)));
  }
  return out;
}

CoherentTuple bool_coherent_tuple(const SeparatingTuple& sep) {
  CoherentTuple out;
  std::vector<Polynomial> fs;
  for (const auto& e : sep.entries) fs.push_back(squarefree_normalize(e.f));
  for (const auto& e : sep.entries) {
    Polynomial z = Polynomial::variable(boolean_ring_of(e.f.ring()), e.variable);
    Polynomial h = squarefree_normalize(e.f) + z;
    out.entries.push_back({e.variable, z + bool_normal_remainder(h, fs, sep.ordering)});
  }
  return out;
}

PointSet::PointSet(std::vector<std::vector<bool>> points) : points_(std::move(points)) {
  if (!points_.empty()) dim_ = points_[0].size();
  std::set<std::vector<bool>> seen;
  for (const auto& p : points_) {
    if (p.size() != dim_) throw std::invalid_argument("points differ in length");
    if (!seen.insert(p).second) throw std::invalid_argument("repeated point");
  }
}

PointSet PointSet::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<bool>> pts;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string bits;
    for (char c : line) {
      if (c == '0' || c == '1') {
        bits += c;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad character '" +
                                    std::string(1, c) + "'");
      }
    }
    if (bits.empty()) continue;
    std::vector<bool> p;
    for (char c : bits) p.push_back(c == '1');
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

bool evaluate_boolean(const Polynomial& f, const std::vector<bool>& point) {
  bool value = false;
  for (const auto& m : f.monomials()) {
    bool t = !m.coeff.is_zero();
    for (std::size_t k = 0; k < point.size() && t; ++k)
      if (m.term[k] != 0 && !point[k]) t = false;
    value ^= t;
  }
  return value;
}

namespace {

void squarefree_terms(std::size_t n, std::size_t dmax, std::size_t start, std::vector<std::size_t>& cur,
                      std::vector<Term>& out) {
  std::vector<Term::Exponent> e(n, 0);
  for (std::size_t k : cur) e[k] = 1;
  out.emplace_back(std::move(e));
  if (cur.size() == dmax) return;
  for (std::size_t k = start; k < n; ++k) {
    cur.push_back(k);
    squarefree_terms(n, dmax, k + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Polynomial> vanishing_ideal_degree_bounded(const PointSet& pts, std::size_t dmax,
                                                       RingPtr ring) {
  const std::size_t m = pts.dimension();
  if (!ring) ring = Ring::make(m, Field::F2, {}, true);
  if (ring->size() != m || !ring->boolean())
    throw std::invalid_argument("ring does not match the point dimension");
  std::vector<Term> terms;
  std::vector<std::size_t> cur;
  squarefree_terms(m, std::min(dmax, m), 0, cur, terms);
  // ascending degrevlex: each kernel vector then leads with its free column
  TermOrdering drl = TermOrdering::deg_rev_lex(m);
  drl.sort_descending(terms);
  std::reverse(terms.begin(), terms.end());

  Matrix eval(Field::F2, pts.size(), terms.size());
  const Scalar one = Scalar::one(Field::F2);
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const auto& p = pts.points()[r];
    for (std::size_t c = 0; c < terms.size(); ++c) {
      bool v = true;
      for (std::size_t k = 0; k < m && v; ++k)
        if (terms[c][k] && !p[k]) v = false;
      if (v) eval.set(r, c, one);
    }
  }
  TermIndex index(std::move(terms));
  return row_polynomials(kernel_basis(eval), index, ring);
}

std::vector<std::uint8_t> parse_sbox_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::uint8_t> table;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      std::size_t used = 0;
      unsigned long v = std::stoul(w, &used, 16);
      if (used != w.size() || v > 255) throw std::invalid_argument("bad S-box entry '" + w + "'");
      table.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (table.size() != 256) throw std::invalid_argument("S-box table needs 256 entries");
  return table;
}

PointSet sbox_graph_points(const std::vector<std::uint8_t>& table) {
  std::vector<std::vector<bool>> pts;
  for (std::size_t a = 0; a < table.size(); ++a) {
    std::vector<bool> p;
    for (int b = 7; b >= 0; --b) p.push_back((a >> b) & 1);
    for (int b = 7; b >= 0; --b) p.push_back((table[a] >> b) & 1);
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

}  // namespace sepvar
