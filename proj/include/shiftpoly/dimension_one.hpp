#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/geometry.hpp"
#include "shiftpoly/patterns.hpp"

namespace shiftpoly {

// Stationary Markov chain on words of length 2n over the alphabet.  States
// are the positive-mass words in index order; P is row-stochastic and pi is
// the stationary distribution, all exact.
struct MarkovChain {
  int n = 0;
  Alphabet alphabet;
  std::vector<std::vector<int>> states;  // symbol-index words, length 2n
  QMatrix P;
  QVector pi;
};

/// Builds the chain representing a locally invariant measure (n >= 1).
/// Throws InvalidInput when the measure is not locally invariant, naming the
/// first violated equation.
MarkovChain markov_extension(const MeasureVector& mu, const Caps& caps = {});

/// The cube-marginal of the chain's stationary process: word w maps to
/// pi(prefix) * P(prefix, suffix).  Inverse of markov_extension.
MeasureVector chain_marginal(const MarkovChain& chain, const Caps& caps = {});

// Word-overlap graph: states are all words of length 2n, edges append one
// symbol to a state's suffix; the edge word has length 2n+1.  For n = 0 this
// is a single state with |alphabet| parallel self-loops.
struct TransitionGraph {
  int n = 0;
  Alphabet alphabet;
  std::vector<std::vector<int>> states;           // index order
  std::vector<std::vector<std::pair<int, int>>> adj;  // (target state, appended symbol)
};

TransitionGraph debruijn_graph(const Alphabet& alphabet, int n, const Caps& caps = {});

// Primitive word up to rotation; stored as the lexicographically least one.
struct PeriodicOrbit {
  std::vector<int> word;

  static PeriodicOrbit of(std::vector<int> word);  // canonicalizes, checks primitivity
  std::size_t period() const { return word.size(); }
};

bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b);
bool operator<(const PeriodicOrbit& a, const PeriodicOrbit& b);

/// All elementary directed cycles (Johnson's algorithm), as canonical orbits
/// sorted by (period, word).
std::vector<PeriodicOrbit> simple_cycles(const TransitionGraph& g, const Caps& caps = {});

/// Uniform measure on the orbit: each cyclic window of length 2n+1
/// contributes 1/period to its pattern's coordinate.
MeasureVector orbit_measure(const PeriodicOrbit& orbit, const PatternIndex& ix);

// Vertex set of the locally invariant polytope matched against orbit
// measures of the word-overlap graph's simple cycles.
struct ClassifyReport {
  bool matched = false;
  VPolytope vertices;
  std::vector<PeriodicOrbit> orbits;                       // sorted
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (vertex idx, orbit idx)
  std::vector<std::size_t> unmatched_vertices;
  std::vector<std::size_t> unmatched_orbits;
};

ClassifyReport classify_extreme_points(const Alphabet& alphabet, int n, const Caps& caps = {});

// Two exact convex decompositions of mu over the given vertex list, found by
// maximizing then minimizing one weight coordinate at a time; unique == true
// means the weight vector is unique and both decompositions coincide.
struct DecompositionResult {
  bool unique = true;
  QVector weights_a;
  QVector weights_b;
};

DecompositionResult find_two_decompositions(const MeasureVector& mu, const VPolytope& vertices);

}  // namespace shiftpoly
