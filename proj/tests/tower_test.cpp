#include "doctest.h"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/linalg.hpp"
#include "shiftpoly/tower.hpp"

using namespace shiftpoly;

TEST_CASE("tower: restriction matrix is a partition of big patterns") {
  const Alphabet ab = Alphabet::parse("0,1");
  const MarginalMap m = marginal_map(2, 1, 1, ab);
  REQUIRE(m.map.M.size() == 8);
  REQUIRE(m.map.M[0].size() == 32);
  for (std::size_t b = 0; b < 32; ++b) {
    int ones = 0;
    for (std::size_t a = 0; a < 8; ++a) {
      CHECK((m.map.M[a][b] == 0 || m.map.M[a][b] == 1));
      if (m.map.M[a][b] == 1) ++ones;
    }
    CHECK(ones == 1);  // every big pattern restricts to exactly one small one
  }
  for (const auto& t : m.map.t) CHECK(t == 0);

  SUBCASE("k = n is the identity") {
    const MarginalMap id = marginal_map(1, 1, 1, ab);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(id.map.M[i][j] == (i == j ? 1 : 0));
  }
  SUBCASE("restriction maps the right delta to the right delta") {
    const PatternIndex big = PatternIndex::make(1, 2, ab);
    const PatternIndex small = PatternIndex::make(1, 1, ab);
    const std::uint64_t bidx = 13;  // word 01101
    QVector delta(32, Rational(0));
    delta[bidx] = 1;
    const QVector img = apply_affine(m.map, delta);
    const Pattern inner = restrict_pattern(big.pattern_at(bidx), small.lambda);
    for (std::size_t a = 0; a < 8; ++a)
      CHECK(img[a] == (a == small.index_of(inner) ? 1 : 0));
  }
}

TEST_CASE("tower: functoriality of restriction") {
  const Alphabet ab = Alphabet::parse("0,1");
  const MarginalMap m21 = marginal_map(2, 1, 1, ab);
  const MarginalMap m32 = marginal_map(3, 2, 1, ab);
  const MarginalMap m31 = marginal_map(3, 1, 1, ab);
  CHECK(mat_mul(m21.map.M, m32.map.M) == m31.map.M);
}

TEST_CASE("tower: d=1 projections are constant in k") {
  const Alphabet ab = Alphabet::parse("0,1");
  const VPolytope i1 = project_Iloc(1, 1, 1, ab);
  const VPolytope p21 = project_Iloc(2, 1, 1, ab);   // direct vertex-image path
  const VPolytope p31 = project_Iloc(3, 1, 1, ab);   // support-oracle path
  CHECK(polytope_equal(p21, i1));
  CHECK(polytope_equal(p31, i1));

  // projected vertices are themselves locally invariant window measures
  const PatternIndex ix1 = PatternIndex::make(1, 1, ab);
  for (const auto& v : p21.vertices) CHECK(is_locally_invariant(make_measure(ix1, v)));
}

TEST_CASE("tower: refinement report rows") {
  const Alphabet ab = Alphabet::parse("0,1");
  const auto rows = refinement_report(1, 3, 1, ab);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].k == 2);
  CHECK(rows[1].k == 3);
  CHECK(rows[0].vertices == 6);
  CHECK(rows[0].equal_to_previous);
  CHECK(rows[1].equal_to_previous);
}
