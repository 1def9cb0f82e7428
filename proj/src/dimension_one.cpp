/*
 * One-dimensional structure: Markov extensions of locally invariant measures,
 * the word-overlap (de Bruijn) graph, elementary cycles by Johnson's
 * algorithm, and uniform orbit measures.  Everything exact.
 */
#include "shiftpoly/dimension_one.hpp"

#include <algorithm>
#include <map>

#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/lp.hpp"

namespace shiftpoly {

namespace {

std::uint64_t word_count(std::size_t m, int len, const Caps& caps) {
  return checked_power(m, static_cast<std::uint64_t>(len), caps.max_patterns, "max_patterns");
}

std::vector<int> word_of_id(std::uint64_t id, std::size_t m, int len) {
  std::vector<int> w(static_cast<std::size_t>(len));
  for (int i = len; i-- > 0;) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(id % m);
    id /= m;
  }
  return w;
}

std::uint64_t id_of_word(const std::vector<int>& w, std::size_t m) {
  std::uint64_t id = 0;
  for (int v : w) id = id * m + static_cast<std::uint64_t>(v);
  return id;
}

void validate_chain(const MarkovChain& chain) {
  const std::size_t m = chain.alphabet.size();
  if (m == 0) throw InvalidInput("chain: empty alphabet");
  if (chain.n < 1) throw InvalidInput("chain: need n >= 1");
  const std::size_t len = static_cast<std::size_t>(2 * chain.n);
  if (chain.states.empty()) throw InvalidInput("chain: no states");
  for (const auto& s : chain.states) {
    if (s.size() != len) throw InvalidInput("chain: state length does not match n");
    for (int v : s)
      if (v < 0 || v >= static_cast<int>(m)) throw InvalidInput("chain: symbol out of range");
  }
  for (std::size_t i = 1; i < chain.states.size(); ++i)
    if (!(chain.states[i - 1] < chain.states[i]))
      throw InvalidInput("chain: states must be strictly increasing");
  if (chain.P.size() != chain.states.size() || chain.pi.size() != chain.states.size())
    throw InvalidInput("chain: matrix/vector size mismatch");
  Rational pisum = 0;
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    if (chain.P[i].size() != chain.states.size())
      throw InvalidInput("chain: transition row width mismatch");
    Rational rs = 0;
    for (const auto& p : chain.P[i]) {
      if (p < 0) throw InvalidInput("chain: negative transition probability");
      rs += p;
    }
    if (rs != 1) throw InvalidInput("chain: transition row does not sum to 1");
    if (chain.pi[i] < 0) throw InvalidInput("chain: negative stationary mass");
    pisum += chain.pi[i];
  }
  if (pisum != 1) throw InvalidInput("chain: stationary vector does not sum to 1");
  for (std::size_t j = 0; j < chain.states.size(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < chain.states.size(); ++i) acc += chain.pi[i] * chain.P[i][j];
    if (acc != chain.pi[j]) throw InvalidInput("chain: stationary vector is not stationary");
  }
}

}  // namespace

MarkovChain markov_extension(const MeasureVector& mu, const Caps& caps) {
  if (mu.index.d != 1) throw InvalidInput("markov_extension: defined for d = 1 only");
  if (mu.index.n < 1) throw InvalidInput("markov_extension: needs n >= 1");
  if (auto bad = first_violation(mu, caps))
    throw InvalidInput("markov_extension: measure is not locally invariant: " + *bad);

  const std::size_t m = mu.index.alphabet.size();
  const int n = mu.index.n;
  const std::uint64_t n_states = word_count(m, 2 * n, caps);

  // mass(s) = sum over the free last cell; full index = state_id * m + symbol.
  std::vector<Rational> mass(n_states, Rational(0));
  for (std::uint64_t s = 0; s < n_states; ++s)
    for (std::size_t c = 0; c < m; ++c) mass[s] += mu.values[s * m + c];

  MarkovChain chain;
  chain.n = n;
  chain.alphabet = mu.index.alphabet;
  std::vector<long> pos(n_states, -1);
  for (std::uint64_t s = 0; s < n_states; ++s) {
    if (mass[s] == 0) continue;
    pos[s] = static_cast<long>(chain.states.size());
    chain.states.push_back(word_of_id(s, m, 2 * n));
  }
  const std::size_t K = chain.states.size();
  chain.P.assign(K, QVector(K, Rational(0)));
  chain.pi.assign(K, Rational(0));
  const std::uint64_t suffix_mod = n_states / m;  // m^(2n-1)
  for (std::uint64_t s = 0; s < n_states; ++s) {
    if (mass[s] == 0) continue;
    const std::size_t i = static_cast<std::size_t>(pos[s]);
    chain.pi[i] = mass[s];
    for (std::size_t c = 0; c < m; ++c) {
      const Rational& w = mu.values[s * m + c];
      if (w == 0) continue;
      std::uint64_t t = (s % suffix_mod) * m + c;
      if (pos[t] < 0)
        throw VerificationFailure("markov_extension: positive word leads to a null state");
      chain.P[i][static_cast<std::size_t>(pos[t])] += w / mass[s];
    }
  }
  validate_chain(chain);  // exact stochasticity and stationarity
  return chain;
}

MeasureVector chain_marginal(const MarkovChain& chain, const Caps& caps) {
  validate_chain(chain);
  const std::size_t m = chain.alphabet.size();
  PatternIndex ix = PatternIndex::make(1, chain.n, chain.alphabet, caps);
  QVector values(ix.count(), Rational(0));
  const std::size_t len = static_cast<std::size_t>(2 * chain.n);
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    for (std::size_t j = 0; j < chain.states.size(); ++j) {
      if (chain.P[i][j] == 0) continue;
      for (std::size_t t = 0; t + 1 < len; ++t)
        if (chain.states[i][t + 1] != chain.states[j][t])
          throw InvalidInput("chain: positive transition joins non-overlapping words");
      std::uint64_t idx =
          id_of_word(chain.states[i], m) * m +
          static_cast<std::uint64_t>(chain.states[j][len - 1]);
      values[idx] += chain.pi[i] * chain.P[i][j];
    }
  }
  return make_measure(std::move(ix), std::move(values));
}

TransitionGraph debruijn_graph(const Alphabet& alphabet, int n, const Caps& caps) {
  if (n < 0) throw InvalidInput("debruijn_graph: n must be >= 0");
  const std::size_t m = alphabet.size();
  if (m == 0) throw InvalidInput("debruijn_graph: empty alphabet");
  word_count(m, 2 * n + 1, caps);  // edge-count guard
  const std::uint64_t n_states = word_count(m, 2 * n, caps);
  TransitionGraph g;
  g.n = n;
  g.alphabet = alphabet;
  g.states.reserve(n_states);
  g.adj.assign(n_states, {});
  for (std::uint64_t s = 0; s < n_states; ++s) g.states.push_back(word_of_id(s, m, 2 * n));
  if (n == 0) {
    for (std::size_t c = 0; c < m; ++c) g.adj[0].push_back({0, static_cast<int>(c)});
    return g;
  }
  const std::uint64_t suffix_mod = n_states / m;
  for (std::uint64_t s = 0; s < n_states; ++s)
    for (std::size_t c = 0; c < m; ++c)
      g.adj[s].push_back(
          {static_cast<int>((s % suffix_mod) * m + c), static_cast<int>(c)});
  return g;
}

PeriodicOrbit PeriodicOrbit::of(std::vector<int> word) {
  if (word.empty()) throw InvalidInput("orbit: empty word");
  const std::size_t p = word.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < p && periodic; ++i)
      if (word[i] != word[i % q]) periodic = false;
    if (periodic) throw InvalidInput("orbit: word is not primitive");
  }
  std::vector<int> best = word;
  for (std::size_t r = 1; r < p; ++r) {
    std::vector<int> rot(p);
    for (std::size_t i = 0; i < p; ++i) rot[i] = word[(i + r) % p];
    if (rot < best) best = rot;
  }
  PeriodicOrbit o;
  o.word = std::move(best);
  return o;
}

bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b) { return a.word == b.word; }
bool operator<(const PeriodicOrbit& a, const PeriodicOrbit& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

namespace {

// Johnson, "Finding all the elementary circuits of a directed graph" (1975).
struct CycleFinder {
  const std::vector<std::vector<int>>& adj;  // simple digraph
  std::size_t V;
  std::uint64_t cap;
  std::vector<std::vector<int>> cycles;

  std::vector<bool> blocked;
  std::vector<std::vector<int>> blist;
  std::vector<int> stack;
  int start = 0;

  // Strongly connected components of the subgraph induced on {low..V-1}.
  std::vector<int> scc_of;
  std::vector<int> index_of, lowlink;
  std::vector<bool> on_stack;
  std::vector<int> tstack;
  int tindex = 0, scc_count = 0;

  void tarjan(int v, int low) {
    index_of[v] = lowlink[v] = tindex++;
    tstack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w < low) continue;
      if (index_of[w] < 0) {
        tarjan(w, low);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index_of[w]);
      }
    }
    if (lowlink[v] == index_of[v]) {
      while (true) {
        int w = tstack.back();
        tstack.pop_back();
        on_stack[w] = false;
        scc_of[w] = scc_count;
        if (w == v) break;
      }
      ++scc_count;
    }
  }

  void unblock(int u) {
    blocked[static_cast<std::size_t>(u)] = false;
    auto& lst = blist[static_cast<std::size_t>(u)];
    std::vector<int> ws = std::move(lst);
    lst.clear();
    for (int w : ws)
      if (blocked[static_cast<std::size_t>(w)]) unblock(w);
  }

  bool circuit(int v) {
    bool found = false;
    stack.push_back(v);
    blocked[static_cast<std::size_t>(v)] = true;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w < start || scc_of[w] != scc_of[start]) continue;
      if (w == start) {
        cycles.push_back(stack);
        if (cycles.size() > cap)
          throw CapExceeded("max_rays", "cycle enumeration exceeded the generator cap");
        found = true;
      } else if (!blocked[static_cast<std::size_t>(w)]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w < start || scc_of[w] != scc_of[start]) continue;
        auto& lst = blist[static_cast<std::size_t>(w)];
        if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
      }
    }
    stack.pop_back();
    return found;
  }

  void run() {
    for (start = 0; start < static_cast<int>(V); ++start) {
      scc_of.assign(V, -1);
      index_of.assign(V, -1);
      lowlink.assign(V, 0);
      on_stack.assign(V, false);
      tstack.clear();
      tindex = scc_count = 0;
      for (int v = start; v < static_cast<int>(V); ++v)
        if (index_of[v] < 0) tarjan(v, start);
      blocked.assign(V, false);
      blist.assign(V, {});
      stack.clear();
      circuit(start);
    }
  }
};

}  // namespace

std::vector<PeriodicOrbit> simple_cycles(const TransitionGraph& g, const Caps& caps) {
  std::vector<PeriodicOrbit> orbits;
  if (g.n == 0) {
    for (const auto& e : g.adj.at(0)) orbits.push_back(PeriodicOrbit::of({e.second}));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
  }
  std::vector<std::vector<int>> adj(g.states.size());
  for (std::size_t s = 0; s < g.states.size(); ++s)
    for (const auto& e : g.adj[s]) adj[s].push_back(e.first);
  CycleFinder cf{adj, g.states.size(), caps.max_rays};
  cf.run();
  orbits.reserve(cf.cycles.size());
  for (const auto& cyc : cf.cycles) {
    // Symbols appended along the cycle: last letter of each successive state.
    std::vector<int> word;
    word.reserve(cyc.size());
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      const auto& next = g.states[static_cast<std::size_t>(cyc[(t + 1) % cyc.size()])];
      word.push_back(next.back());
    }
    orbits.push_back(PeriodicOrbit::of(std::move(word)));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

MeasureVector orbit_measure(const PeriodicOrbit& orbit, const PatternIndex& ix) {
  if (ix.d != 1) throw InvalidInput("orbit_measure: defined for d = 1 only");
  const std::size_t m = ix.alphabet.size();
  const std::size_t p = orbit.period();
  for (int v : orbit.word)
    if (v < 0 || v >= static_cast<int>(m))
      throw InvalidInput("orbit_measure: symbol out of range");
  QVector values(ix.count(), Rational(0));
  const int len = 2 * ix.n + 1;
  Rational share(1, static_cast<unsigned long>(p));
  for (std::size_t t = 0; t < p; ++t) {
    std::uint64_t idx = 0;
    for (int j = 0; j < len; ++j)
      idx = idx * m + static_cast<std::uint64_t>(
                          orbit.word[(t + static_cast<std::size_t>(j)) % p]);
    values[idx] += share;
  }
  return make_measure(ix, std::move(values));
}

ClassifyReport classify_extreme_points(const Alphabet& alphabet, int n, const Caps& caps) {
  PatternIndex ix = PatternIndex::make(1, n, alphabet, caps);
  ClassifyReport rep;
  rep.vertices = vertex_enumeration(build_Iloc(ix, caps), caps);
  rep.orbits = simple_cycles(debruijn_graph(alphabet, n, caps));

  std::map<QVector, std::size_t, QVecLess> by_measure;
  for (std::size_t o = 0; o < rep.orbits.size(); ++o)
    by_measure[orbit_measure(rep.orbits[o], ix).values] = o;
  std::vector<bool> orbit_hit(rep.orbits.size(), false);
  for (std::size_t v = 0; v < rep.vertices.vertices.size(); ++v) {
    auto it = by_measure.find(rep.vertices.vertices[v]);
    if (it == by_measure.end()) {
      rep.unmatched_vertices.push_back(v);
    } else {
      rep.pairs.push_back({v, it->second});
      orbit_hit[it->second] = true;
    }
  }
  for (std::size_t o = 0; o < rep.orbits.size(); ++o)
    if (!orbit_hit[o]) rep.unmatched_orbits.push_back(o);
  rep.matched = rep.unmatched_vertices.empty() && rep.unmatched_orbits.empty() &&
                rep.vertices.vertices.size() == rep.orbits.size();
  return rep;
}

DecompositionResult find_two_decompositions(const MeasureVector& mu, const VPolytope& verts) {
  const std::size_t K = verts.vertices.size();
  if (K == 0) throw InvalidInput("find_two_decompositions: empty vertex list");
  if (static_cast<std::size_t>(verts.dim) != mu.values.size())
    throw InvalidInput("find_two_decompositions: dimension mismatch");

  HPolytope W;  // weight polytope over lambda in R^K
  W.dim = static_cast<int>(K);
  for (std::size_t i = 0; i < mu.values.size(); ++i) {
    QVector row(K);
    for (std::size_t j = 0; j < K; ++j) row[j] = verts.vertices[j][i];
    W.eq_A.push_back(std::move(row));
    W.eq_b.push_back(mu.values[i]);
  }
  W.eq_A.push_back(QVector(K, Rational(1)));
  W.eq_b.push_back(Rational(1));
  for (std::size_t j = 0; j < K; ++j) {
    QVector row(K, Rational(0));
    row[j] = -1;
    W.in_A.push_back(std::move(row));
    W.in_b.push_back(Rational(0));
  }

  auto check = [&](const QVector& w) {
    Rational total = 0;
    for (const auto& x : w) {
      if (x < 0) throw VerificationFailure("decomposition: negative weight");
      total += x;
    }
    if (total != 1) throw VerificationFailure("decomposition: weights do not sum to 1");
    for (std::size_t i = 0; i < mu.values.size(); ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < K; ++j) acc += w[j] * verts.vertices[j][i];
      if (acc != mu.values[i])
        throw VerificationFailure("decomposition: weights do not reproduce the measure");
    }
  };

  DecompositionResult res;
  QVector some;
  for (std::size_t j = 0; j < K; ++j) {
    QVector c(K, Rational(0));
    c[j] = 1;
    LpResult hi = lp_solve(W, c, true);
    if (hi.status == LpStatus::infeasible)
      throw InvalidInput("find_two_decompositions: measure is not in the hull");
    if (hi.status != LpStatus::optimal)
      throw VerificationFailure("find_two_decompositions: unbounded weight LP");
    LpResult lo = lp_solve(W, c, false);
    if (j == 0) some = hi.x;
    if (hi.objective != lo.objective) {
      check(hi.x);
      check(lo.x);
      res.unique = false;
      res.weights_a = std::move(hi.x);
      res.weights_b = std::move(lo.x);
      return res;
    }
  }
  check(some);
  res.unique = true;
  res.weights_a = some;
  res.weights_b = std::move(some);
  return res;
}

}  // namespace shiftpoly
