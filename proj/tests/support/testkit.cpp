#include "testkit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sepvar/ring.hpp"

#ifndef SEPVAR_DATA_DIR
#define SEPVAR_DATA_DIR "data"
#endif

namespace sepvar::testkit {

std::string data_path(const std::string& name) { return std::string(SEPVAR_DATA_DIR) + "/" + name; }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Scalar random_nonzero_scalar(Rng& rng, Field field) {
  if (field == Field::F2) return Scalar::one(field);
  static const long nums[] = {1, 1, 1, -1, -1, 2, -2, 3, 5, -7};
  long num = nums[uniform(rng, 0, 9)];
  long den = uniform(rng, 0, 3) == 0 ? static_cast<long>(uniform(rng, 2, 3)) : 1;
  return Scalar(field, mpq_class(num, den));
}

Term random_term(Rng& rng, const Ring& ring, unsigned min_deg, unsigned max_deg) {
  const std::size_t n = ring.size();
  if (ring.boolean()) max_deg = std::min<unsigned>(max_deg, n);
  unsigned deg = static_cast<unsigned>(uniform(rng, min_deg, max_deg));
  std::vector<Term::Exponent> e(n, 0);
  for (unsigned k = 0; k < deg; ++k) {
    std::size_t v = uniform(rng, 0, n - 1);
    if (ring.boolean())
      while (e[v]) v = (v + 1) % n;
    ++e[v];
  }
  return Term(std::move(e));
}

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::size_t nterms, unsigned min_deg,
                             unsigned max_deg) {
  std::vector<Monomial> ms;
  for (std::size_t k = 0; k < nterms; ++k)
    ms.push_back({random_term(rng, *ring, min_deg, max_deg), random_nonzero_scalar(rng, ring->field())});
  return Polynomial::from_monomials(ring, std::move(ms));
}

IndexTuple random_tuple(Rng& rng, std::size_t nvars, std::size_t s) {
  std::vector<std::size_t> all(nvars);
  for (std::size_t k = 0; k < nvars; ++k) all[k] = k;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(s);
  return IndexTuple(std::move(all), nvars);
}

namespace {
Instance random_interreduction_candidate(Rng& rng, Field field, std::size_t nvars);
}

Instance random_instance(Rng& rng, const InstanceShape& shape) {
  RingPtr ring = Ring::make(shape.nvars, shape.field, {}, shape.boolean);
  IndexTuple z = random_tuple(rng, shape.nvars, shape.zsize);
  std::bernoulli_distribution coin_z(shape.linear_z), coin(0.35);
  PolySystem sys(ring);
  for (std::size_t i = 0; i < shape.gens; ++i) {
    Polynomial g(ring);
    if (i < z.size() && coin_z(rng)) g += Polynomial::variable(ring, z[i]);
    if (coin(rng)) {
      g += Polynomial::monomial(ring, Term::variable(shape.nvars, uniform(rng, 0, shape.nvars - 1)),
                                random_nonzero_scalar(rng, shape.field));
    }
    g += random_polynomial(rng, ring, uniform(rng, 1, 3), 2, shape.max_degree);
    if (shape.constants && coin(rng)) g += Polynomial::constant(ring, 1);
    if (!g.is_zero()) sys.add(std::move(g));
  }
  return {std::move(sys), std::move(z)};
}

Instance random_interreduction_input(Rng& rng, Field field, std::size_t nvars) {
  while (true) {
    Instance in = random_interreduction_candidate(rng, field, nvars);
    std::vector<Polynomial> lin;
    for (const auto& g : in.sys.generators()) lin.push_back(linear_part(g));
    if (span_dimension(lin) == in.z.size()) return in;
  }
}

namespace {

Instance random_interreduction_candidate(Rng& rng, Field field, std::size_t nvars) {
  RingPtr ring = Ring::make(nvars, field);
  const std::size_t s = uniform(rng, 1, std::min<std::size_t>(3, nvars));
  IndexTuple z = random_tuple(rng, nvars, s);
  const std::size_t r = s + uniform(rng, 0, 3);
  std::bernoulli_distribution coin(0.4);
  auto z_multiple = [&] {
    Term t = random_term(rng, *ring, 1, 2);
    return t.times_variable(z[uniform(rng, 0, s - 1)]);
  };
  std::vector<Polynomial> gs;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial g(ring);
    if (i < s) g += Polynomial::variable(ring, z[i]);
    for (std::size_t j = 0; j < s; ++j)
      if (j != i && coin(rng)) g += Polynomial::monomial(ring, Term::variable(nvars, z[j]),
                                                         random_nonzero_scalar(rng, field));
    if (!(i < s && coin(rng))) {
      std::size_t extra = uniform(rng, 1, 3);
      for (std::size_t k = 0; k < extra; ++k)
        g += Polynomial::monomial(ring, z_multiple(), random_nonzero_scalar(rng, field));
    }
    gs.push_back(std::move(g));
  }
  // occasionally a dependent generator
  if (coin(rng) && gs.size() >= 2) {
    Polynomial d = gs[0].scaled(random_nonzero_scalar(rng, field)) + gs[1];
    gs.push_back(std::move(d));
  }
  std::shuffle(gs.begin(), gs.end(), rng);
  PolySystem sys(ring);
  for (auto& g : gs) sys.add(std::move(g));
  return {std::move(sys), std::move(z)};
}

}  // namespace

// ---- SpanBasis ----

void SpanBasis::fix(mpq_class& c) const {
  if (field_ == Field::F2) {
    mpz_class r = c.get_num() % 2;
    c = (r != 0) ? 1 : 0;
  }
}

SpanBasis::Vec SpanBasis::to_vec(const Polynomial& f) const {
  Vec v;
  for (const auto& m : f.monomials()) {
    auto e = m.term.exponents();
    mpq_class c = m.coeff.value();
    fix(c);
    if (c != 0) v[Key(e.begin(), e.end())] = c;
  }
  return v;
}

void SpanBasis::reduce(Vec& v) const {
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    mpq_class c = it->second;
    for (const auto& [k, x] : row) {
      mpq_class& slot = v[k];
      slot -= c * x;
      fix(slot);
      if (slot == 0) v.erase(k);
    }
  }
}

bool SpanBasis::add(const Polynomial& f) {
  Vec v = to_vec(f);
  reduce(v);
  if (v.empty()) return false;
  mpq_class lead = v.begin()->second;
  for (auto& [k, x] : v) {
    x /= lead;
    fix(x);
  }
  rows_.emplace(v.begin()->first, std::move(v));
  return true;
}

bool SpanBasis::contains(const Polynomial& f) const {
  Vec v = to_vec(f);
  reduce(v);
  return v.empty();
}

bool in_span(const Polynomial& f, std::span<const Polynomial> basis) {
  SpanBasis b(f.field());
  for (const auto& g : basis) b.add(g);
  return b.contains(f);
}

bool same_span(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  if (a.empty() || b.empty()) {
    auto all_zero = [](std::span<const Polynomial> s) {
      return std::all_of(s.begin(), s.end(), [](const Polynomial& p) { return p.is_zero(); });
    };
    return all_zero(a) && all_zero(b);
  }
  SpanBasis sa(a[0].field()), sb(b[0].field());
  for (const auto& f : a) sa.add(f);
  for (const auto& f : b) sb.add(f);
  for (const auto& f : a)
    if (!sb.contains(f)) return false;
  for (const auto& f : b)
    if (!sa.contains(f)) return false;
  return true;
}

std::size_t span_dimension(std::span<const Polynomial> polys) {
  if (polys.empty()) return 0;
  SpanBasis s(polys[0].field());
  for (const auto& f : polys) s.add(f);
  return s.dimension();
}

// ---- LP ----

std::optional<std::vector<mpq_class>> lp_feasible(const std::vector<std::vector<mpq_class>>& a,
                                                  const std::vector<mpq_class>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  if (m == 0) return std::vector<mpq_class>(n, mpq_class(0));
  // columns: x (n), surplus (m), artificial (m), rhs
  const std::size_t cols = n + 2 * m + 1, rhs = cols - 1;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(cols, mpq_class(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = -sign;
    t[i][n + m + i] = 1;
    t[i][rhs] = sign * b[i];
    basis[i] = n + m + i;
  }
  // reduced costs of phase one (minimize the sum of artificials)
  std::vector<mpq_class> cost(cols, mpq_class(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n + m || j == rhs) cost[j] -= t[i][j];
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs && enter == cols; ++j)
      if (cost[j] < 0) enter = j;
    if (enter == cols) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    mpq_class p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    mpq_class f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (cost[rhs] != 0) return std::nullopt;  // -(sum of artificials)
  std::vector<mpq_class> x(n, mpq_class(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][rhs];
  return x;
}

bool strict_positive_weight_exists(const std::vector<std::vector<long>>& diffs, std::size_t n) {
  // w = 1 + u with u >= 0, and d.w >= 1 for each d
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (const auto& d : diffs) {
    std::vector<mpq_class> row(n);
    long sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = d[k];
      sum += d[k];
    }
    a.push_back(std::move(row));
    b.push_back(mpq_class(1 - sum));
  }
  return lp_feasible(a, b).has_value();
}

namespace {

using F2Poly = std::map<std::vector<Term::Exponent>, bool>;

void add_into(F2Poly& acc, const Polynomial& g) {
  for (const auto& m : g.monomials()) {
    std::vector<Term::Exponent> e(m.term.exponents().begin(), m.term.exponents().end());
    auto [it, fresh] = acc.emplace(std::move(e), true);
    if (!fresh) acc.erase(it);
  }
}

}  // namespace

bool span_contains_separating_tuple(const PolySystem& sys, const IndexTuple& z) {
  if (sys.ring()->field() != Field::F2) throw std::invalid_argument("F2 only");
  const std::size_t n = sys.ring()->size();
  if (z.empty()) return true;
  std::vector<Polynomial> gs;
  for (const auto& g : sys.generators())
    if (!g.is_zero()) gs.push_back(g);
  const std::size_t r = gs.size();
  if (r > 16) throw std::invalid_argument("too many generators for brute force");

  // constraint sets per z_i: rows e_{z_i} - t for the other terms t
  std::vector<std::vector<std::vector<std::vector<long>>>> options(z.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
    F2Poly f;
    for (std::size_t j = 0; j < r; ++j)
      if (mask >> j & 1) add_into(f, gs[j]);
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::vector<Term::Exponent> zi(n, 0);
      zi[z[i]] = 1;
      if (!f.count(zi)) continue;
      bool ok = true;
      std::vector<std::vector<long>> rows;
      for (const auto& [e, _] : f) {
        if (e == zi) continue;
        if (e[z[i]] > 0) {
          ok = false;
          break;
        }
        std::vector<long> d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = static_cast<long>(zi[k]) - static_cast<long>(e[k]);
        rows.push_back(std::move(d));
      }
      if (!ok) continue;
      std::sort(rows.begin(), rows.end());
      if (std::find(options[i].begin(), options[i].end(), rows) == options[i].end())
        options[i].push_back(std::move(rows));
    }
  }
  for (const auto& o : options)
    if (o.empty()) return false;

  std::vector<std::vector<long>> chosen;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == z.size()) return true;
    for (const auto& rows : options[i]) {
      const std::size_t before = chosen.size();
      chosen.insert(chosen.end(), rows.begin(), rows.end());
      if (strict_positive_weight_exists(chosen, n) && self(self, i + 1)) return true;
      chosen.resize(before);
    }
    return false;
  };
  return search(search, 0);
}

bool eval_f2(const Polynomial& f, std::uint64_t point) {
  bool v = false;
  for (const auto& m : f.monomials()) {
    if (m.coeff.is_zero()) continue;
    bool t = true;
    for (std::size_t k = 0; k < m.term.size() && t; ++k)
      if (m.term[k] && !(point >> k & 1)) t = false;
    v ^= t;
  }
  return v;
}

std::vector<std::uint64_t> common_zeros_f2(std::span<const Polynomial> polys, std::size_t nvars) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 0; p < (std::uint64_t(1) << nvars); ++p)
    if (std::none_of(polys.begin(), polys.end(), [&](const Polynomial& f) { return eval_f2(f, p); }))
      out.push_back(p);
  return out;
}

PolySystem commutator_system(const std::string& text, std::size_t nvars) {
  RingPtr ring = Ring::make(nvars, Field::Q);
  std::vector<Polynomial> entries;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      if (w == "0") {
        entries.emplace_back(ring);
      } else if (w == "1") {
        entries.push_back(Polynomial::constant(ring, 1));
      } else {
        auto idx = ring->index_of(w);
        if (!idx) throw std::invalid_argument("unknown entry " + w);
        entries.push_back(Polynomial::variable(ring, *idx));
      }
    }
  }
  std::size_t dim = 0;
  while ((dim + 1) * (dim + 1) * 3 <= entries.size()) ++dim;
  if (dim * dim * 3 != entries.size()) throw std::invalid_argument("need three square matrices");
  auto at = [&](std::size_t m, std::size_t i, std::size_t j) -> const Polynomial& {
    return entries[m * dim * dim + i * dim + j];
  };
  PolySystem sys(ring);
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [p, q] : pairs)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Polynomial e(ring);
        for (std::size_t k = 0; k < dim; ++k) e += at(p, i, k) * at(q, k, j) - at(q, i, k) * at(p, k, j);
        if (!e.is_zero()) sys.add(std::move(e));
      }
  return sys;
}

}  // namespace sepvar::testkit
