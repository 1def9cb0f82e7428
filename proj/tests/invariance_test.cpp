#include "doctest.h"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"

using namespace shiftpoly;

namespace {

MeasureVector uniform_product(const PatternIndex& ix) {
  return make_measure(ix, QVector(ix.count(), Rational(1) / Rational(Integer(ix.count()))));
}

}  // namespace

TEST_CASE("invariance: generator family shape") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const auto gen = generator_constraints(ix);
  REQUIRE(gen.size() == 4);  // overlap {0,1} of the 3-window, 2^2 patterns
  for (const auto& c : gen) {
    CHECK(c.u == Cell{1});
    CHECK(c.E.cells == std::vector<Cell>{{0}, {1}});
    CHECK_FALSE(c.lhs.empty());
    CHECK_FALSE(c.rhs.empty());
    const QVector row = constraint_row(c, ix.count());
    Rational sum = 0;
    for (const auto& v : row) sum += v;
    CHECK(sum == 0);  // +1 entries balance -1 entries
  }
  CHECK(generator_constraints(PatternIndex::make(1, 0, ab)).empty());
}

TEST_CASE("invariance: full family is finite and capped") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  CHECK(full_constraints(ix).size() == 20);
  Caps caps;
  caps.max_triples = 5;
  CHECK_THROWS_AS(full_constraints(ix, caps), CapExceeded);
}

TEST_CASE("invariance: window polytope carries simplex plus generator equations") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const HPolytope H = build_Iloc(ix);
  CHECK(H.dim == 8);
  CHECK(H.eq_A.size() == 1 + 4);           // mass one + generators
  CHECK(H.in_A.size() == 8);               // nonnegativity
  CHECK(H.eq_b[0] == 1);
}

TEST_CASE("invariance: violation reporting") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);

  SUBCASE("uniform product is invariant") {
    const MeasureVector mu = uniform_product(ix);
    CHECK_FALSE(first_violation(mu).has_value());
    CHECK(is_locally_invariant(mu));
  }
  SUBCASE("a point mass on one window is not") {
    QVector v(8, Rational(0));
    v[2] = 1;  // word 010
    const MeasureVector mu = make_measure(ix, v);
    const auto violation = first_violation(mu);
    REQUIRE(violation.has_value());
    CHECK_FALSE(violation->empty());
    CHECK_FALSE(is_locally_invariant(mu));
  }
}

TEST_CASE("invariance: generator and full families span the same hull") {
  const Alphabet binary = Alphabet::parse("0,1");
  const EquivalenceReport r1 = generator_equivalence(PatternIndex::make(1, 1, binary));
  CHECK(r1.equal);
  CHECK(r1.spans_match);
  CHECK(r1.subset_identity_ok);
  CHECK(r1.generator_rank == 3);
  CHECK(r1.closure_rank == 3);
  CHECK(r1.full_triples == 20);

  const EquivalenceReport r2 =
      generator_equivalence(PatternIndex::make(1, 1, Alphabet::parse("0,1,2")));
  CHECK(r2.equal);
  CHECK(r2.generator_rank == 8);
}
