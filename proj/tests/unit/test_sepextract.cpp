#include "common.hpp"

#include "sepvar/gboracle.hpp"
#include "sepvar/sepextract.hpp"

using namespace sepvar;
using namespace sepvar::testkit;

namespace {

void check_leading(const SeparatingTuple& sep) {
  for (const auto& e : sep.entries) {
    Monomial lt = leading_monomial(sep.ordering, e.f);
    CHECK(lt.term == Term::variable(e.f.nvars(), e.variable));
    CHECK(lt.coeff.is_one());
  }
}

void check_coherent(const CoherentTuple& coh, const IndexTuple& z) {
  for (const auto& e : coh.entries) {
    Polynomial h = Polynomial::variable(e.f.ring(), e.variable) - e.f;
    for (const auto& m : h.monomials()) CHECK_FALSE(m.term.divisible_by_any(z.indices()));
  }
}

}  // namespace

TEST_SUITE("sepextract") {

TEST_CASE("compatible ordering") {
  PolySystem sys = fixture("running_example.sys");
  const RingPtr& R = sys.ring();
  IndexTuple z = IndexTuple::parse("x4,x5,x7", *R);
  WeightVector w = {0, 0, 0, 43, 7, 0, 1, 0, 0, 0, 0};
  TermOrdering sigma = compatible_ordering(w, z);
  Polynomial f3 = P("x7 + x2^2*x6^4 + x1*x2*x3^2*x8^2 + x1*x2*x6^2*x10^2 + x1^3*x10 + x3 + 1", R);
  CHECK(leading_monomial(sigma, f3).term == Term::variable(11, 6));

  // zero weights: only the tiebreak matters
  WeightVector zero(11, mpz_class(0));
  TermOrdering t0 = compatible_ordering(zero, z);
  CHECK(t0.compare(Term::variable(11, 0), Term::variable(11, 3)) > 0);

  // agreement with the explicit matrix built from the same rows
  Rng rng(41);
  RingPtr S = Ring::make(5, Field::Q);
  for (int k = 0; k < 20; ++k) {
    WeightVector rw(5);
    IndexTuple rz = random_tuple(rng, 5, uniform(rng, 1, 3));
    for (std::size_t i = 0; i < 5; ++i) rw[i] = rz.contains(i) ? long(uniform(rng, 1, 50)) : 0L;
    TermOrdering ord = compatible_ordering(rw, rz);
    IntMatrix rows = {rw};
    std::vector<mpz_class> deg(5, mpz_class(1));
    for (std::size_t zi : rz) deg[zi] = 0;
    rows.push_back(deg);
    for (std::size_t c = 5; c-- > 0;) {
      std::vector<mpz_class> r(5, mpz_class(0));
      r[c] = -1;
      rows.push_back(r);
    }
    for (int p = 0; p < 50; ++p) {
      Term t = random_term(rng, *S, 0, 4), u = random_term(rng, *S, 0, 4);
      auto expect = std::strong_ordering::equal;
      for (const auto& row : rows) {
        mpz_class a = 0, b = 0;
        for (std::size_t i = 0; i < 5; ++i) {
          a += row[i] * t[i];
          b += row[i] * u[i];
        }
        if (a != b) {
          expect = a > b ? std::strong_ordering::greater : std::strong_ordering::less;
          break;
        }
      }
      CHECK(ord.compare(t, u) == expect);
    }
  }
}

TEST_CASE("extraction under the explicit matrix ordering") {
  PolySystem sys = fixture("running_example.sys");
  const RingPtr& R = sys.ring();
  IndexTuple z = IndexTuple::parse("x4,x5,x7", *R);
  TermOrdering a = TermOrdering::matrix(parse_integer_matrix(read_file(data_path("order_matrix_a.mat"))));
  SeparatingTuple sep = find_separating_tuple(sys, z, a);
  REQUIRE(sep.entries.size() == 3);
  CHECK(sep.entries[0].f ==
        P("x4 - x1^2*x6 + x5*x6*x8 + x5*x6*x10 + x3*x6 - x5*x7 + x7*x8 + x1", R));
  CHECK(sep.entries[1].f ==
        P("x5 + x1*x2*x3^2*x8^2 + x6*x7^2*x8 + x1*x3*x8^2 + x7*x8 + x7*x10 + x2", R));
  CHECK(sep.entries[2].f ==
        P("x7 + x2^2*x6^4 + x1*x2*x3^2*x8^2 + x1*x2*x6^2*x10^2 + x1^3*x10 + x3 + 1", R));
  check_leading(sep);
  for (const auto& e : sep.entries) CHECK(in_span(e.f, sys.generators()));

  CHECK_THROWS_AS(find_separating_tuple(sys, IndexTuple::parse("x9", *R), a), NoRowWithLeadingTerm);
}

TEST_CASE("trivial extractions") {
  RingPtr R = Ring::make(2, Field::Q);
  PolySystem lin(R, {P("x1 - x2", R)});
  IndexTuple z({0}, 2);
  SeparatingTuple sep = find_separating_tuple(lin, z, TermOrdering::lex(2));
  CHECK(sep.entries[0].f == P("x1 - x2", R));
  SeparatingTuple tr = find_separating_tuple_tracked(lin, z);
  CHECK(tr.entries[0].f == P("x1 - x2", R));
  CoherentTuple coh = coherent_tuple(sep, z);
  CHECK(coh.entries[0].f == P("x1 - x2", R));
  EliminatedSystem el = eliminate(lin, coh);
  CHECK(el.system.ring()->size() == 1);
  CHECK(el.system.ring()->name(0) == "x2");
  REQUIRE(el.system.size() == 1);
  CHECK(el.system.generators()[0].is_zero());
  CHECK(el.kept == std::vector<std::size_t>{1});

  PolySystem prod(R, {P("x1*x2", R)});
  CHECK_THROWS_AS(find_separating_tuple_tracked(prod, z), OptimizedCheckFailed);
}

TEST_CASE("tracked extraction, coherent tuple and elimination on the fixture") {
  PolySystem sys = fixture("running_example.sys");
  const RingPtr& R = sys.ring();
  IndexTuple z = IndexTuple::parse("x4,x5,x7,x9", *R);
  SeparatingTuple sep = find_separating_tuple_tracked(sys, z);
  check_leading(sep);
  REQUIRE(sep.entries.size() == 4);
  CHECK(sep.entries[0].f == P("x4 - x1^2*x6 + x5*x6*x8 + x5*x6*x10 + x3*x6 - x5*x7 + x7*x8 + x1", R));
  CHECK(sep.entries[1].f == sys.generators()[2]);
  CHECK(sep.entries[2].f == sys.generators()[1]);
  CHECK(sep.entries[3].f == P("x9 + x1*x8*x10^2 + x3*x11", R));

  CoherentTuple coh = coherent_tuple(sep, z);
  check_coherent(coh, z);
  REQUIRE(coh.entries.size() == 4);
  // x7 and x9 tie on weight; the tiebreak puts x9 lower
  CHECK(coh.entries[0].variable == 8);
  CHECK(coh.entries[1].variable == 6);
  CHECK(coh.entries[2].variable == 4);
  CHECK(coh.entries[3].variable == 3);

  EliminatedSystem el = eliminate(sys, coh);
  CHECK(el.system.size() == 9);
  CHECK(el.system.ring()->names() == std::vector<std::string>{"x1", "x2", "x3", "x6", "x8", "x10", "x11"});
}

TEST_CASE("coherent tuple of a coherent tuple is unchanged") {
  RingPtr R = Ring::make(4, Field::Q);
  IndexTuple z({0, 1}, 4);
  SeparatingTuple sep{{{0, P("x1 - x3^2", R)}, {1, P("x2 + x3*x4", R)}},
                      compatible_ordering({1, 5, 0, 0}, z)};
  CoherentTuple coh = coherent_tuple(sep, z);
  REQUIRE(coh.entries.size() == 2);
  CHECK(coh.entries[0].variable == 0);
  CHECK(coh.entries[0].f == sep.entries[0].f);
  CHECK(coh.entries[1].f == sep.entries[1].f);
}

TEST_CASE("extraction soundness and ideal membership on random F2 instances") {
  Rng rng(42);
  int checked = 0;
  for (int k = 0; k < 200 && checked < 40; ++k) {
    InstanceShape shape;
    shape.nvars = uniform(rng, 3, 5);
    shape.gens = uniform(rng, 2, 4);
    shape.zsize = uniform(rng, 1, 2);
    shape.max_degree = 2;
    Instance in = random_instance(rng, shape);
    CheckOutcome o = check_separating(in.sys, in.z);
    if (!o.success) continue;
    std::optional<GroebnerBasis> gbo, elim;
    try {
      gbo = buchberger(in.sys, TermOrdering::deg_rev_lex(shape.nvars));
      elim = buchberger(in.sys, elimination_ordering(shape.nvars, in.z));
    } catch (const OracleOverloaded&) {
      continue;
    }
    const GroebnerBasis& gb = *gbo;
    if (gb.is_unit()) continue;
    ++checked;
    SeparatingTuple plain = find_separating_tuple(in.sys, in.z, compatible_ordering(o.weights, in.z));
    SeparatingTuple tracked = find_separating_tuple_tracked(in.sys, in.z);
    for (const SeparatingTuple* sep : {&plain, &tracked}) {
      check_leading(*sep);
      for (const auto& e : sep->entries) CHECK(normal_form(e.f, gb).is_zero());
      CoherentTuple coh = coherent_tuple(*sep, in.z);
      check_coherent(coh, in.z);
      for (const auto& e : coh.entries) CHECK(normal_form(e.f, gb).is_zero());
      EliminatedSystem el = eliminate(in.sys, coh);
      // re-embed into the full ring and test membership
      for (const auto& g : el.system.generators()) {
        std::vector<Monomial> ms;
        for (const auto& m : g.monomials()) {
          std::vector<Term::Exponent> e(shape.nvars, 0);
          for (std::size_t i = 0; i < el.kept.size(); ++i) e[el.kept[i]] = m.term[i];
          ms.push_back({Term(std::move(e)), m.coeff});
        }
        CHECK(normal_form(Polynomial::from_monomials(in.sys.ring(), ms), gb).is_zero());
      }
      // and the elimination ideal lies inside the ideal of the output
      GroebnerBasis small = buchberger(el.system, TermOrdering::deg_rev_lex(el.kept.size()));
      for (const auto& p : elim->polys) {
        bool free = true;
        for (const auto& m : p.monomials()) free = free && !m.term.divisible_by_any(in.z.indices());
        if (!free) continue;
        std::vector<Monomial> ms;
        for (const auto& m : p.monomials()) {
          std::vector<Term::Exponent> e(el.kept.size());
          for (std::size_t i = 0; i < el.kept.size(); ++i) e[i] = m.term[el.kept[i]];
          ms.push_back({Term(std::move(e)), m.coeff});
        }
        CHECK(normal_form(Polynomial::from_monomials(el.system.ring(), ms), small).is_zero());
      }
    }
    for (const auto& e : plain.entries) CHECK(in_span(e.f, in.sys.generators()));
  }
  CHECK(checked >= 20);
}

}
