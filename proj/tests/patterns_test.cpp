#include <random>

#include "doctest.h"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/patterns.hpp"

using namespace shiftpoly;

TEST_CASE("alphabet: parsing and lookup") {
  const Alphabet ab = Alphabet::parse("0,1,2");
  CHECK(ab.size() == 3);
  CHECK(ab.index_of("2") == 2);
  CHECK(ab.index_of("x") == -1);
  CHECK_THROWS_AS(Alphabet::parse(""), InvalidInput);
  CHECK_THROWS_AS(Alphabet::parse("a,a"), InvalidInput);
  CHECK_THROWS_AS(Alphabet::parse("a,,b"), InvalidInput);
}

TEST_CASE("shape: canonical cell order") {
  const Shape s = Shape::of(2, {{1, 0}, {0, 1}, {0, 0}, {1, 0}});
  CHECK(s.cells == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(s.contains({0, 1}));
  CHECK_FALSE(s.contains({1, 1}));
  CHECK(s.position_of({1, 0}) == 2);
  CHECK(s.translated({0, 1}).cells == std::vector<Cell>{{0, -1}, {0, 0}, {1, -1}});
  CHECK(s.subset_of(cube_shape(2, 1)));
  CHECK_FALSE(cube_shape(2, 1).subset_of(s));
  CHECK_THROWS_AS(Shape::of(0, {}), InvalidInput);
  CHECK_THROWS_AS(Shape::of(2, {{0}}), InvalidInput);
}

TEST_CASE("patterns: translation moves the window") {
  // a(v) on cells 0..2; translate by u=1 gives domain -1..1 with a'(v) = a(v+1)
  const Pattern a = word_pattern({0, 1, 2});
  const Pattern t = translate_pattern(a, {1});
  CHECK(t.shape.cells == std::vector<Cell>{{-1}, {0}, {1}});
  CHECK(t.value_at({-1}) == a.value_at({0}));
  CHECK(t.value_at({1}) == a.value_at({2}));
  CHECK_THROWS_AS(t.value_at({5}), InvalidInput);
}

TEST_CASE("pattern index: mixed radix, most significant first") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  CHECK(ix.count() == 8);
  // d=1 words read as base-2 numerals
  CHECK(ix.index_of(Pattern{ix.lambda, {0, 1, 0}}) == 2);
  CHECK(ix.index_of(Pattern{ix.lambda, {1, 1, 1}}) == 7);
  const Pattern back = ix.pattern_at(2);
  CHECK(back.values == std::vector<int>{0, 1, 0});

  SUBCASE("round trip is a bijection (randomized)") {
    std::mt19937_64 rng(7);
    const PatternIndex big = PatternIndex::make(2, 1, ab);
    for (int t = 0; t < 200; ++t) {
      const std::uint64_t idx = rng() % big.count();
      CHECK(big.index_of(big.pattern_at(idx)) == idx);
    }
  }
  SUBCASE("cap enforced") {
    Caps caps;
    caps.max_patterns = 100;
    CHECK_THROWS_AS(PatternIndex::make(2, 2, ab, caps), CapExceeded);
  }
}

TEST_CASE("patterns: enumeration and cylinders") {
  const Alphabet ab = Alphabet::parse("0,1");
  const Shape cell0 = Shape::of(1, {{0}});
  const auto pats = enumerate_patterns(ab, cell0);
  REQUIRE(pats.size() == 2);
  CHECK(pats[0].values == std::vector<int>{0});
  CHECK(pats[1].values == std::vector<int>{1});

  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  Pattern middle_one;
  middle_one.shape = cell0;
  middle_one.values = {1};
  // cell 0 carries weight 2 in the 3-cell window
  CHECK(cylinder_members(middle_one, ix) == std::vector<std::uint64_t>{2, 3, 6, 7});

  const Pattern full = ix.pattern_at(6);  // word 110
  const Pattern r = restrict_pattern(full, cell0);
  CHECK(r.values == std::vector<int>{1});
}

TEST_CASE("checked_power: cap violations carry the cap name") {
  CHECK(checked_power(2, 10, 1 << 20, "max_patterns") == 1024);
  CHECK_THROWS_AS(checked_power(2, 64, 1 << 20, "max_patterns"), CapExceeded);
  try {
    checked_power(3, 40, 100, "max_words");
  } catch (const CapExceeded& e) {
    CHECK(e.cap == "max_words");
  }
}

TEST_CASE("measure vector: validation") {
  const Alphabet ab = Alphabet::parse("0,1");
  PatternIndex ix = PatternIndex::make(1, 0, ab);
  CHECK_THROWS_AS(make_measure(ix, QVector{Rational(1)}), InvalidInput);
  CHECK_THROWS_AS(make_measure(ix, QVector{Rational(2), Rational(-1)}), InvalidInput);
  CHECK_THROWS_AS(make_measure(ix, QVector{Rational(1), Rational(1)}), InvalidInput);
  const MeasureVector mu =
      make_measure(ix, QVector{Rational(1) / Rational(3), Rational(2) / Rational(3)});
  CHECK(mu.values[1] == Rational(2) / Rational(3));
}
