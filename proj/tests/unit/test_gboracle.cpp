#include "common.hpp"

#include "sepvar/boolring.hpp"
#include "sepvar/gboracle.hpp"
#include "sepvar/sepcheck.hpp"

using namespace sepvar;
using namespace sepvar::testkit;

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
  Monomial lf = leading_monomial(ord, f), lg = leading_monomial(ord, g);
  Term l = lf.term.lcm(lg.term);
  Polynomial s = f.times_term(lf.term.quotient_of(l), lf.coeff.inverse());
  s -= g.times_term(lg.term.quotient_of(l), lg.coeff.inverse());
  return s;
}

void check_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    Monomial li = leading_monomial(gb.ordering, gb.polys[i]);
    CHECK(li.coeff.is_one());
    for (std::size_t j = 0; j < gb.polys.size(); ++j) {
      if (i == j) continue;
      CHECK(normal_form(spoly(gb.polys[i], gb.polys[j], gb.ordering), gb).is_zero());
      for (const auto& m : gb.polys[j].monomials()) CHECK_FALSE(li.term.divides(m.term));
    }
  }
}

}  // namespace

TEST_SUITE("gboracle") {

TEST_CASE("small bases") {
  RingPtr R = Ring::make(3, Field::Q);
  PolySystem s(R, {P("x1 - x2", R), P("x2 - x3", R)});
  GroebnerBasis gb = buchberger(s, TermOrdering::lex(3));
  REQUIRE(gb.polys.size() == 2);
  CHECK(gb.polys[0] == P("x1 - x3", R));
  CHECK(gb.polys[1] == P("x2 - x3", R));

  RingPtr B = Ring::make(1, Field::F2, {}, true);
  PolySystem b(B, {P("x1 + 1", Ring::make(1, Field::F2)).in_ring(B)});
  GroebnerBasis bg = buchberger(b, TermOrdering::lex(1));
  REQUIRE(bg.polys.size() == 1);
  CHECK(bg.polys[0].to_string() == "x1 + 1");

  PolySystem unit(R, {P("x1", R), P("x1 + 1", R)});
  CHECK(buchberger(unit, TermOrdering::lex(3)).is_unit());
}

TEST_CASE("random bases satisfy the Buchberger criterion") {
  Rng rng(61);
  int done = 0;
  for (int k = 0; k < 80; ++k) {
    Field f = k % 2 ? Field::F2 : Field::Q;
    RingPtr R = Ring::make(3, f);
    PolySystem s(R);
    for (std::size_t j = 0, r = uniform(rng, 1, 3); j < r; ++j)
      s.add(random_polynomial(rng, R, uniform(rng, 1, 3), 0, 2));
    TermOrdering ord = k % 3 ? TermOrdering::deg_rev_lex(3) : TermOrdering::lex(3);
    try {
      GroebnerBasis gb = buchberger(s, ord, {2000, 12, 200});
      check_reduced(gb);
      for (const auto& g : s.generators()) CHECK(normal_form(g, gb).is_zero());
      Polynomial h = random_polynomial(rng, R, 4, 0, 3);
      Polynomial r = normal_form(h, gb);
      CHECK(normal_form(r, gb) == r);
      CHECK(normal_form(h - r, gb).is_zero());
      if (!gb.is_unit()) CHECK(normal_form(Polynomial::constant(R, 1), gb) == Polynomial::constant(R, 1));
      ++done;
    } catch (const OracleOverloaded&) {
    }
  }
  CHECK(done > 60);
}

TEST_CASE("resource guards") {
  PolySystem sys = fixture("running_example.sys");
  CHECK_THROWS_AS(buchberger(sys, TermOrdering::deg_rev_lex(11), {50, 40, 2000}), OracleOverloaded);
}

TEST_CASE("separating oracle") {
  RingPtr R = Ring::make(3, Field::Q);
  CHECK(oracle_is_separating(PolySystem(R, {P("x1 - x2*x3", R)}), IndexTuple({0}, 3)));
  RingPtr S = Ring::make(2, Field::Q);
  CHECK_FALSE(oracle_is_separating(PolySystem(S, {P("x1*x2", S)}), IndexTuple({0}, 2)));

  TermOrdering e = elimination_ordering(4, IndexTuple({2, 0}, 4));
  // any term with x3 or x1 beats every term in x2, x4
  CHECK(e.compare(Term::variable(4, 0), Term::variable(4, 1, 5)) > 0);
  CHECK(e.compare(Term::variable(4, 2), Term::variable(4, 0, 3)) > 0);
}

TEST_CASE("checker successes are confirmed by the oracle") {
  Rng rng(62);
  int confirmed = 0;
  for (int k = 0; k < 200; ++k) {
    InstanceShape shape;
    shape.field = k % 2 ? Field::F2 : Field::Q;
    shape.boolean = k % 4 == 1;
    shape.nvars = uniform(rng, 3, 5);
    shape.gens = uniform(rng, 2, 4);
    shape.zsize = uniform(rng, 1, 2);
    shape.max_degree = 2;
    Instance in = random_instance(rng, shape);
    bool plain = shape.boolean ? bool_check_separating(in.sys, in.z, BoolCheckMode::Plain).success
                               : check_separating(in.sys, in.z).success;
    bool opt = shape.boolean
                   ? bool_check_separating(in.sys, in.z, BoolCheckMode::OptimizedWithFieldIdeal).success
                   : check_separating_optimized(in.sys, in.z).success;
    if (!plain && !opt) continue;
    try {
      GroebnerBasis gb = buchberger(in.sys, TermOrdering::deg_rev_lex(shape.nvars));
      if (gb.is_unit()) continue;
      CHECK(oracle_is_separating(in.sys, in.z));
      ++confirmed;
    } catch (const OracleOverloaded&) {
    }
  }
  CHECK(confirmed > 30);
}

}
