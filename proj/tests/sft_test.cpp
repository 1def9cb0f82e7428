#include "doctest.h"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/sft.hpp"

using namespace shiftpoly;

namespace {

Pattern cells_pattern(std::vector<Cell> cells, std::vector<int> values) {
  const int d = static_cast<int>(cells[0].size());
  Pattern p;
  p.shape = Shape::of(d, std::move(cells));
  p.values = std::move(values);
  return p;
}

}  // namespace

TEST_CASE("sft: occurrence predicate") {
  const Pattern w11 = word_pattern({1, 1});
  CHECK(pattern_occurs(w11, word_pattern({0, 1, 1, 0})));
  CHECK_FALSE(pattern_occurs(w11, word_pattern({0, 1, 0, 1})));
  Pattern empty;
  empty.shape = Shape::of(1, {});
  CHECK(pattern_occurs(empty, word_pattern({0})));
  // a 2d corner shape matching inside a 2x2 block
  const Pattern corner = cells_pattern({{0, 0}, {0, 1}, {1, 0}}, {1, 0, 0});
  const Pattern block = cells_pattern({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {1, 0, 0, 1});
  CHECK(pattern_occurs(corner, block));
  CHECK_FALSE(pattern_occurs(cells_pattern({{0, 0}, {0, 1}, {1, 0}}, {1, 1, 0}), block));
}

TEST_CASE("sft: golden-mean face") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const ForbiddenSet gm{1, {word_pattern({1, 1})}};
  const FaceDescription face = face_of_forbidden(gm, ix);
  CHECK(face.zeroed == std::vector<std::uint64_t>{3, 6, 7});  // 011, 110, 111

  const FeasibilityCertificate cert = face_feasible(face);
  REQUIRE(cert.feasible);
  CHECK(verify_certificate(face.polytope, cert));

  const VPolytope fv = face_vertices(face);
  REQUIRE(fv.vertices.size() == 3);
  // exactly the orbit measures of 0, 01, 001
  std::vector<QVector> expect;
  for (const auto& w : {std::vector<int>{0}, {0, 1}, {0, 0, 1}})
    expect.push_back(orbit_measure(PeriodicOrbit::of(w), ix).values);
  CHECK(polytope_equal(fv, make_vpolytope(8, expect)));

  // the pruned overlap graph carries the same three orbits
  const auto orbits = simple_cycles(pruned_debruijn(gm, ab, 1));
  REQUIRE(orbits.size() == 3);
  for (const auto& o : orbits) CHECK(contains(fv, orbit_measure(o, ix).values));
}

TEST_CASE("sft: forbidding every symbol is infeasible with a checkable witness") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const ForbiddenSet all{1, {word_pattern({0}), word_pattern({1})}};
  const FaceDescription face = face_of_forbidden(all, ix);
  const FeasibilityCertificate cert = face_feasible(face);
  REQUIRE_FALSE(cert.feasible);
  CHECK(verify_certificate(face.polytope, cert));
  CHECK(face_vertices(face).vertices.empty());
}

TEST_CASE("sft: one-dimensional emptiness decision") {
  const Alphabet ab = Alphabet::parse("0,1");
  CHECK_FALSE(sft_empty_1d(ForbiddenSet{1, {word_pattern({1, 1})}}, ab));
  CHECK(sft_empty_1d(
      ForbiddenSet{1, {word_pattern({0, 0}), word_pattern({1, 1}), word_pattern({0, 1})}}, ab));
  CHECK_FALSE(sft_empty_1d(ForbiddenSet{1, {}}, ab));
  CHECK(sft_empty_1d(ForbiddenSet{1, {word_pattern({0}), word_pattern({1})}}, ab));
}

TEST_CASE("sft: hard squares in the plane") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(2, 1, ab);
  const ForbiddenSet hs{2, {cells_pattern({{0, 0}, {0, 1}}, {1, 1}),
                            cells_pattern({{0, 0}, {1, 0}}, {1, 1})}};
  const FaceDescription face = face_of_forbidden(hs, ix);
  const FeasibilityCertificate cert = face_feasible(face);
  REQUIRE(cert.feasible);

  const auto found = bounded_2d_periodic_search(hs, ix, 2);
  REQUIRE(found.has_value());
  CHECK(found->values[0] == 1);  // the all-zero configuration's window delta
  CHECK(is_locally_invariant(*found));
  for (const auto z : face.zeroed) CHECK(found->values[z] == 0);
}

TEST_CASE("sft: checkerboard marginal at the single-cell window") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix0 = PatternIndex::make(2, 0, ab);
  ForbiddenSet cb{2, {}};
  for (int s : {0, 1}) {
    cb.patterns.push_back(cells_pattern({{0, 0}, {0, 1}}, {s, s}));
    cb.patterns.push_back(cells_pattern({{0, 0}, {1, 0}}, {s, s}));
  }
  const auto mu = bounded_2d_periodic_search(cb, ix0, 2);
  REQUIRE(mu.has_value());
  CHECK(mu->values[0] == Rational(1) / Rational(2));
  CHECK(mu->values[1] == Rational(1) / Rational(2));
}

TEST_CASE("sft: unsatisfiable plane rules yield no torus configuration") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix0 = PatternIndex::make(2, 0, ab);
  const ForbiddenSet allcell{
      2, {cells_pattern({{0, 0}}, {0}), cells_pattern({{0, 0}}, {1})}};
  CHECK_FALSE(bounded_2d_periodic_search(allcell, ix0, 2).has_value());
}

TEST_CASE("sft: forbidding more shrinks the face") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const VPolytope big =
      face_vertices(face_of_forbidden(ForbiddenSet{1, {word_pattern({1, 1})}}, ix));
  const VPolytope small = face_vertices(
      face_of_forbidden(ForbiddenSet{1, {word_pattern({1, 1}), word_pattern({0, 1})}}, ix));
  for (const auto& w : small.vertices) CHECK(in_hull(big.vertices, w));
}
