#include <algorithm>

#include "doctest.h"
#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/serialize.hpp"
#include "shiftpoly/sft.hpp"
#include "shiftpoly/tower.hpp"

using namespace shiftpoly;

namespace {
const Alphabet ab = Alphabet::parse("0,1");
}

TEST_CASE("serialize: pattern round trip, sort-on-parse, rejection") {
  const Pattern p = word_pattern({0, 1, 1});
  const Json j = pattern_json(p, ab);
  CHECK(j["values"] == Json::array({"0", "1", "1"}));
  CHECK(parse_pattern(j, ab) == p);

  const Json scrambled = {{"d", 1},
                          {"cells", Json::array({{2}, {0}, {1}})},
                          {"values", Json::array({"1", "0", "1"})}};
  CHECK(parse_pattern(scrambled, ab) == p);

  const Json dup = {{"d", 1},
                    {"cells", Json::array({{0}, {0}})},
                    {"values", Json::array({"0", "1"})}};
  CHECK_THROWS_AS(parse_pattern(dup, ab), InvalidInput);
  CHECK_THROWS_AS(
      parse_pattern({{"d", 1}, {"cells", Json::array({{0}})}, {"values", Json::array({"x"})}}, ab),
      InvalidInput);
  CHECK_THROWS_AS(parse_pattern(Json::array(), ab), InvalidInput);
}

TEST_CASE("serialize: polytopes canonicalize through JSON") {
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const HPolytope H = build_Iloc(ix);
  const Json hj = hpolytope_json(H);
  CHECK(hpolytope_json(parse_hpolytope(hj)) == hj);

  const VPolytope V = vertex_enumeration(H);
  const Json vj = vpolytope_json(V);
  const VPolytope V2 = parse_vpolytope(vj);
  CHECK(polytope_equal(V2, V));
  CHECK(vpolytope_json(V2) == vj);

  Json shuffled = vj;
  std::reverse(shuffled["vertices"].begin(), shuffled["vertices"].end());
  CHECK(vpolytope_json(parse_vpolytope(shuffled)) == vj);
}

TEST_CASE("serialize: measures and extension chains") {
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const QVector vals(ix.count(), Rational(1) / 8);
  const MeasureVector mu = make_measure(ix, vals);
  const Json mj = measure_json(mu);
  const MeasureVector mu2 = parse_measure(mj, ab);
  CHECK(mu2.values == mu.values);
  CHECK(measure_json(mu2) == mj);

  const MarkovChain ch = markov_extension(mu);
  const Json cj = chain_json(ch);
  const MarkovChain ch2 = parse_chain(cj, ab);
  CHECK(chain_json(ch2) == cj);
  CHECK(ch2.n == ch.n);

  Json bad = cj;
  bad["pi"][0] = "1/3";  // breaks mass / stationarity
  CHECK_THROWS_AS(parse_chain(bad, ab), InvalidInput);
}

TEST_CASE("serialize: constraint dump shape") {
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const auto cs = generator_constraints(ix);
  const Json j = constraints_json(cs, ab);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == cs.size());
  CHECK(j[0].contains("E"));
  CHECK(j[0].contains("a"));
  CHECK(j[0].contains("u"));
  CHECK(j[0].contains("lhs"));
  CHECK(j[0].contains("rhs"));
}

TEST_CASE("serialize: classification and refinement reports") {
  const ClassifyReport rep = classify_extreme_points(ab, 1);
  const Json j = classify_json(rep, ab);
  CHECK(j["matched"] == true);
  CHECK(j["pairs"].size() == 6);

  const auto rows = refinement_report(0, 1, 1, ab);
  const Json rj = refinement_json(rows);
  REQUIRE(rj.is_array());
  CHECK(rj[0].contains("k"));
  CHECK(rj[0].contains("equal_to_previous"));
}

TEST_CASE("serialize: forbidden sets") {
  const ForbiddenSet L{1, {word_pattern({1, 1})}};
  const Json j = forbidden_json(L, ab);
  const ForbiddenSet L2 = parse_forbidden(j, ab);
  CHECK(forbidden_json(L2, ab) == j);
  CHECK(L2.patterns.size() == 1);
}

TEST_CASE("serialize: polytope chains and compiled languages") {
  const VPolytope simplex =
      make_vpolytope(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  const VPolytope inner = make_vpolytope(2, {{Rational(1) / 3, Rational(2) / 3},
                                             {Rational(2) / 3, Rational(1) / 3}});
  const PolytopeChain chain{2, {simplex, inner}};
  const Json j = polytope_chain_json(chain);
  const PolytopeChain chain2 = parse_polytope_chain(j);
  CHECK(polytope_chain_json(chain2) == j);

  const auto langs = compile_languages(chain2);
  const Json lj = language_json(langs[1]);
  const WordLanguage lang2 = parse_language(lj);
  CHECK(language_json(lang2) == lj);
  CHECK(lang2.N == 3);

  Json nondesc = j;
  std::swap(nondesc["levels"][0], nondesc["levels"][1]);
  CHECK_THROWS_AS(parse_polytope_chain(nondesc), InvalidInput);
}

TEST_CASE("serialize: substitution systems and Perron reports") {
  const SubstitutionSystem S = substitution_preset("penrose-robinson");
  const Json j = substitution_json(S);
  const SubstitutionSystem S2 = parse_substitution(j);
  CHECK(substitution_json(S2) == j);

  const PerronResult P = perron_frequencies(S2, true);
  const Json pj = perron_json(P, S2);
  CHECK(pj["exact_mode"] == true);
  CHECK(pj["root"]["exact"] == "(3+1*sqrt(5))/2");
  CHECK(pj["frequencies"][0]["type"] == "fat");

  const Json qj = quadratic_json(P.freq[0] / P.freq[1]);
  CHECK(qj["exact"] == "(1+1*sqrt(5))/2");
  CHECK(qj["decimal"] == "1.618033988749895");

  CHECK(dump_json(pj) == dump_json(perron_json(perron_frequencies(S, true), S)));
}
