#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"

using namespace shiftpoly;

namespace {

// Oracle: elementary circuits by plain DFS - only paths through states >= the
// start state, so each circuit is found exactly once.  Independent of the
// production enumerator.
void dfs_cycles(const TransitionGraph& g, std::size_t start, std::size_t at,
                std::vector<char>& on_path, std::vector<int>& word,
                std::set<PeriodicOrbit>& out) {
  for (const auto& [to, sym] : g.adj[at]) {
    if (static_cast<std::size_t>(to) == start) {
      std::vector<int> w = word;
      w.push_back(sym);
      out.insert(PeriodicOrbit::of(std::move(w)));
      continue;
    }
    if (static_cast<std::size_t>(to) < start || on_path[static_cast<std::size_t>(to)]) continue;
    on_path[static_cast<std::size_t>(to)] = 1;
    word.push_back(sym);
    dfs_cycles(g, start, static_cast<std::size_t>(to), on_path, word, out);
    word.pop_back();
    on_path[static_cast<std::size_t>(to)] = 0;
  }
}

std::vector<PeriodicOrbit> oracle_cycles(const TransitionGraph& g) {
  std::set<PeriodicOrbit> out;
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    std::vector<char> on_path(g.states.size(), 0);
    std::vector<int> word;
    on_path[s] = 1;
    dfs_cycles(g, s, s, on_path, word, out);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("orbits: canonical form") {
  CHECK(PeriodicOrbit::of({1, 0, 0}).word == std::vector<int>{0, 0, 1});
  CHECK(PeriodicOrbit::of({0, 1}) == PeriodicOrbit::of({1, 0}));
  CHECK_THROWS_AS(PeriodicOrbit::of({0, 1, 0, 1}), InvalidInput);  // not primitive
  CHECK_THROWS_AS(PeriodicOrbit::of({}), InvalidInput);
  CHECK(PeriodicOrbit::of({0}) < PeriodicOrbit::of({1}));
  CHECK(PeriodicOrbit::of({1}) < PeriodicOrbit::of({0, 1}));  // shorter first
}

TEST_CASE("word-overlap graph: structure") {
  const Alphabet ab = Alphabet::parse("0,1");
  const TransitionGraph g1 = debruijn_graph(ab, 1);
  REQUIRE(g1.states.size() == 4);
  for (const auto& edges : g1.adj) CHECK(edges.size() == 2);
  const TransitionGraph g0 = debruijn_graph(ab, 0);
  REQUIRE(g0.states.size() == 1);
  CHECK(g0.adj[0].size() == 2);  // parallel self loops, one per symbol
}

TEST_CASE("simple cycles: agree with a DFS oracle") {
  const Alphabet binary = Alphabet::parse("0,1");
  const Alphabet ternary = Alphabet::parse("0,1,2");
  for (int n = 0; n <= 2; ++n) {
    const TransitionGraph g = debruijn_graph(binary, n);
    CAPTURE(n);
    CHECK(simple_cycles(g) == oracle_cycles(g));
  }
  const TransitionGraph g3 = debruijn_graph(ternary, 1);
  CHECK(simple_cycles(g3) == oracle_cycles(g3));

  // frozen: binary n=1 gives exactly the six short orbits
  const auto cycles = simple_cycles(debruijn_graph(binary, 1));
  std::vector<PeriodicOrbit> expect = {
      PeriodicOrbit::of({0}),       PeriodicOrbit::of({1}),    PeriodicOrbit::of({0, 1}),
      PeriodicOrbit::of({0, 0, 1}), PeriodicOrbit::of({0, 1, 1}),
      PeriodicOrbit::of({0, 0, 1, 1})};
  std::sort(expect.begin(), expect.end());
  CHECK(cycles == expect);
}

TEST_CASE("orbit measures: window marginals of periodic points") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const MeasureVector mu = orbit_measure(PeriodicOrbit::of({0, 0, 1}), ix);
  // windows of ...001001...: 001, 010, 100 (indices 1, 2, 4), each mass 1/3
  const Rational third = Rational(1) / Rational(3);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(mu.values[i] == ((i == 1 || i == 2 || i == 4) ? third : Rational(0)));
  CHECK(is_locally_invariant(mu));
}

TEST_CASE("classification: vertices are exactly the short-orbit measures") {
  const Alphabet ab = Alphabet::parse("0,1");
  const ClassifyReport rep = classify_extreme_points(ab, 1);
  CHECK(rep.matched);
  CHECK(rep.vertices.vertices.size() == 6);
  CHECK(rep.orbits.size() == 6);
  CHECK(rep.pairs.size() == 6);
  CHECK(rep.unmatched_vertices.empty());
  CHECK(rep.unmatched_orbits.empty());
}

TEST_CASE("markov extension: round trip and stationarity") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);

  SUBCASE("uniform product gives the doubly-1/2 chain") {
    const MeasureVector mu = make_measure(ix, QVector(8, Rational(1) / Rational(8)));
    const MarkovChain chain = markov_extension(mu);
    REQUIRE(chain.states.size() == 4);
    for (const auto& row : chain.P)
      for (const auto& p : row) CHECK((p == 0 || p == Rational(1) / Rational(2)));
    for (const auto& p : chain.pi) CHECK(p == Rational(1) / Rational(4));
    CHECK(chain_marginal(chain).values == mu.values);
  }

  SUBCASE("random convex combinations of vertices round-trip exactly") {
    const ClassifyReport rep = classify_extreme_points(ab, 1);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 10; ++t) {
      QVector mu_vals(8, Rational(0));
      Rational total = 0;
      QVector ws;
      for (std::size_t i = 0; i < rep.vertices.vertices.size(); ++i) {
        const Rational w = Rational(static_cast<int>(rng() % 5)) / Rational(static_cast<int>(rng() % 7) + 1);
        ws.push_back(w);
        total += w;
      }
      if (total == 0) continue;
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < 8; ++j)
          mu_vals[j] += ws[i] / total * rep.vertices.vertices[i][j];
      const MeasureVector mu = make_measure(ix, mu_vals);
      const MarkovChain chain = markov_extension(mu);
      CAPTURE(t);
      REQUIRE(chain_marginal(chain).values == mu.values);
      // stationarity: pi^T P = pi^T
      for (std::size_t c = 0; c < chain.pi.size(); ++c) {
        Rational acc = 0;
        for (std::size_t r = 0; r < chain.pi.size(); ++r) acc += chain.pi[r] * chain.P[r][c];
        REQUIRE(acc == chain.pi[c]);
      }
    }
  }

  SUBCASE("non-invariant measures are rejected with a named constraint") {
    QVector v(8, Rational(0));
    v[2] = 1;
    CHECK_THROWS_AS(markov_extension(make_measure(ix, v)), InvalidInput);
  }
}

TEST_CASE("decompositions: interior points admit two distinct certificates") {
  const Alphabet ab = Alphabet::parse("0,1");
  const PatternIndex ix = PatternIndex::make(1, 1, ab);
  const ClassifyReport rep = classify_extreme_points(ab, 1);
  const MeasureVector mu = make_measure(ix, QVector(8, Rational(1) / Rational(8)));
  const DecompositionResult d = find_two_decompositions(mu, rep.vertices);
  for (const QVector* w : {&d.weights_a, &d.weights_b}) {
    Rational sum = 0;
    QVector combo(8, Rational(0));
    for (std::size_t i = 0; i < w->size(); ++i) {
      REQUIRE((*w)[i] >= 0);
      sum += (*w)[i];
      for (std::size_t j = 0; j < 8; ++j) combo[j] += (*w)[i] * rep.vertices.vertices[i][j];
    }
    REQUIRE(sum == 1);
    REQUIRE(combo == mu.values);
  }
  CHECK_FALSE(d.unique);
  CHECK(d.weights_a != d.weights_b);

  // a vertex itself decomposes uniquely
  const MeasureVector vtx = make_measure(ix, rep.vertices.vertices[0]);
  const DecompositionResult dv = find_two_decompositions(vtx, rep.vertices);
  CHECK(dv.unique);
  CHECK(dv.weights_a == dv.weights_b);
}
