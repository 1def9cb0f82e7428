/*
 * Shifts of finite type as faces of the locally invariant polytope.  The
 * occurrence scan is translation-closed inside the window; emptiness in d=1
 * reduces to cycle existence in the pruned word-overlap graph; d=2 gets a
 * bounded periodic search that never claims emptiness.
 */
#include "shiftpoly/sft.hpp"

#include <algorithm>
#include <map>

#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/parallel.hpp"

namespace shiftpoly {

namespace {

void validate_forbidden(const ForbiddenSet& L, int d, const Alphabet& alphabet) {
  if (L.d != d) throw InvalidInput("forbidden set has the wrong dimension");
  for (const auto& a : L.patterns) {
    if (a.shape.d != d) throw InvalidInput("forbidden pattern has the wrong dimension");
    if (a.values.size() != a.shape.size())
      throw InvalidInput("forbidden pattern value count does not match its shape");
    for (int v : a.values)
      if (v < 0 || v >= static_cast<int>(alphabet.size()))
        throw InvalidInput("forbidden pattern uses a symbol outside the alphabet");
  }
}

// Max per-coordinate extent; 0 for the empty shape.
int shape_extent(const Shape& s) {
  if (s.cells.empty()) return 0;
  int ext = 1;
  for (int i = 0; i < s.d; ++i) {
    int lo = s.cells[0][static_cast<std::size_t>(i)];
    int hi = lo;
    for (const auto& c : s.cells) {
      lo = std::min(lo, c[static_cast<std::size_t>(i)]);
      hi = std::max(hi, c[static_cast<std::size_t>(i)]);
    }
    ext = std::max(ext, hi - lo + 1);
  }
  return ext;
}

}  // namespace

bool pattern_occurs(const Pattern& a, const Pattern& b) {
  if (a.shape.d != b.shape.d) throw InvalidInput("pattern_occurs: dimension mismatch");
  if (a.shape.cells.empty()) return true;
  const Cell& e0 = a.shape.cells[0];
  const int d = a.shape.d;
  for (const auto& anchor : b.shape.cells) {
    Cell u(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      u[static_cast<std::size_t>(i)] =
          e0[static_cast<std::size_t>(i)] - anchor[static_cast<std::size_t>(i)];
    bool match = true;
    for (std::size_t j = 0; j < a.shape.cells.size() && match; ++j) {
      Cell c(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        c[static_cast<std::size_t>(i)] =
            a.shape.cells[j][static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i)];
      long pos = b.shape.position_of(c);
      if (pos < 0 || b.values[static_cast<std::size_t>(pos)] != a.values[j]) match = false;
    }
    if (match) return true;
  }
  return false;
}

FaceDescription face_of_forbidden(const ForbiddenSet& L, const PatternIndex& index,
                                  const Caps& caps) {
  validate_forbidden(L, index.d, index.alphabet);
  for (const auto& a : L.patterns)
    if (shape_extent(a.shape) > 2 * index.n + 1)
      throw InvalidInput("forbidden pattern does not fit in the window");

  FaceDescription face;
  face.index = index;
  const std::uint64_t count = index.count();
  std::vector<char> hit(count, 0);
  par::for_each_index(count, [&](std::uint64_t idx) {
    Pattern b = index.pattern_at(idx);
    for (const auto& a : L.patterns)
      if (pattern_occurs(a, b)) {
        hit[idx] = 1;
        return;
      }
  });
  for (std::uint64_t idx = 0; idx < count; ++idx)
    if (hit[idx]) face.zeroed.push_back(idx);

  face.polytope = build_Iloc(index, caps);
  for (std::uint64_t idx : face.zeroed) {
    QVector row(count, Rational(0));
    row[idx] = 1;
    face.polytope.eq_A.push_back(std::move(row));
    face.polytope.eq_b.push_back(Rational(0));
  }
  return face;
}

FeasibilityCertificate face_feasible(const FaceDescription& face) {
  FeasibilityCertificate cert = lp_feasible(face.polytope);
  if (!verify_certificate(face.polytope, cert))
    throw VerificationFailure("face_feasible: certificate failed substitution check");
  return cert;
}

VPolytope face_vertices(const FaceDescription& face, const Caps& caps) {
  return vertex_enumeration(face.polytope, caps);
}

TransitionGraph pruned_debruijn(const ForbiddenSet& L, const Alphabet& alphabet, int n,
                                const Caps& caps) {
  validate_forbidden(L, 1, alphabet);
  TransitionGraph g = debruijn_graph(alphabet, n, caps);
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : g.adj[s]) {
      std::vector<int> w = g.states[s];
      w.push_back(e.second);
      Pattern window = word_pattern(w);
      bool bad = false;
      for (const auto& a : L.patterns)
        if (pattern_occurs(a, window)) {
          bad = true;
          break;
        }
      if (!bad) kept.push_back(e);
    }
    g.adj[s] = std::move(kept);
  }
  return g;
}

bool sft_empty_1d(const ForbiddenSet& L, const Alphabet& alphabet, const Caps& caps) {
  validate_forbidden(L, 1, alphabet);
  int ext = 1;
  for (const auto& a : L.patterns) {
    if (a.shape.cells.empty()) return true;  // the empty pattern occurs everywhere
    ext = std::max(ext, shape_extent(a.shape));
  }
  const int n = ext / 2;  // smallest n with 2n+1 >= ext
  TransitionGraph g = pruned_debruijn(L, alphabet, n, caps);
  if (n == 0) return g.adj[0].empty();

  // Iterative three-color DFS for a directed cycle.
  enum : char { WHITE, GREY, BLACK };
  std::vector<char> color(g.states.size(), WHITE);
  std::vector<std::pair<int, std::size_t>> stack;  // (state, next edge offset)
  for (std::size_t root = 0; root < g.states.size(); ++root) {
    if (color[root] != WHITE) continue;
    stack.push_back({static_cast<int>(root), 0});
    color[root] = GREY;
    while (!stack.empty()) {
      auto& [v, off] = stack.back();
      const auto& edges = g.adj[static_cast<std::size_t>(v)];
      if (off == edges.size()) {
        color[static_cast<std::size_t>(v)] = BLACK;
        stack.pop_back();
        continue;
      }
      int w = edges[off++].first;
      if (color[static_cast<std::size_t>(w)] == GREY) return false;  // cycle: nonempty
      if (color[static_cast<std::size_t>(w)] == WHITE) {
        color[static_cast<std::size_t>(w)] = GREY;
        stack.push_back({w, 0});
      }
    }
  }
  return true;
}

std::optional<MeasureVector> bounded_2d_periodic_search(const ForbiddenSet& L,
                                                        const PatternIndex& index, int m,
                                                        const Caps& caps) {
  if (index.d != 2) throw InvalidInput("torus search: window must be two-dimensional");
  validate_forbidden(L, 2, index.alphabet);
  if (m < 1) throw InvalidInput("torus search: m must be >= 1");
  if (static_cast<std::uint64_t>(m) > caps.max_torus)
    throw CapExceeded("max_torus", "torus side exceeds the configured bound");

  const int msyms = static_cast<int>(index.alphabet.size());
  const std::size_t cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  auto wrap = [m](int x) { return ((x % m) + m) % m; };

  // One occurrence per (pattern, torus shift): cell requirements collapsed
  // modulo m; contradictory collapses can never occur and are dropped.
  struct Occurrence {
    std::vector<std::pair<int, int>> req;  // (cell id, symbol), ascending ids
  };
  std::vector<std::vector<Occurrence>> by_last(cells);
  for (const auto& a : L.patterns) {
    if (a.shape.cells.empty()) return std::nullopt;  // empty pattern forbids everything
    for (int t0 = 0; t0 < m; ++t0)
      for (int t1 = 0; t1 < m; ++t1) {
        std::map<int, int> req;
        bool possible = true;
        for (std::size_t j = 0; j < a.shape.cells.size() && possible; ++j) {
          int id = wrap(t0 + a.shape.cells[j][0]) * m + wrap(t1 + a.shape.cells[j][1]);
          auto it = req.find(id);
          if (it == req.end())
            req[id] = a.values[j];
          else if (it->second != a.values[j])
            possible = false;
        }
        if (!possible) continue;
        Occurrence occ;
        occ.req.assign(req.begin(), req.end());
        by_last[static_cast<std::size_t>(occ.req.back().first)].push_back(std::move(occ));
      }
  }

  // Row-major backtracking, symbols in ascending order; first solution wins.
  std::vector<int> assign(cells, -1);
  std::size_t p = 0;
  while (true) {
    if (p == cells) break;  // solved
    bool placed = false;
    for (int v = assign[p] + 1; v < msyms; ++v) {
      assign[p] = v;
      bool ok = true;
      for (const auto& occ : by_last[p]) {
        bool all = true;
        for (const auto& [id, sym] : occ.req)
          if (assign[static_cast<std::size_t>(id)] != sym) {
            all = false;
            break;
          }
        if (all) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++p;
      if (p < cells) assign[p] = -1;
    } else {
      assign[p] = -1;
      if (p == 0) return std::nullopt;
      --p;
    }
  }

  QVector values(index.count(), Rational(0));
  Rational share(1, static_cast<unsigned long>(cells));
  for (int t0 = 0; t0 < m; ++t0)
    for (int t1 = 0; t1 < m; ++t1) {
      Pattern b;
      b.shape = index.lambda;
      b.values.reserve(index.lambda.size());
      for (const auto& c : index.lambda.cells)
        b.values.push_back(
            assign[static_cast<std::size_t>(wrap(t0 + c[0]) * m + wrap(t1 + c[1]))]);
      values[index.index_of(b)] += share;
    }
  return make_measure(index, std::move(values));
}

}  // namespace shiftpoly
