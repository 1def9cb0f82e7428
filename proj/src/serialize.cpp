#include "shiftpoly/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "shiftpoly/errors.hpp"

namespace shiftpoly {

namespace {

// nlohmann type/access errors become InvalidInput so the CLI maps them to the
// bad-input exit code uniformly.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json qvec_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_str(q));
  return out;
}

QVector parse_qvec(const Json& j) {
  QVector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_rational(e.get<std::string>()));
  return out;
}

Json cell_json(const Cell& c) {
  Json out = Json::array();
  for (int x : c) out.push_back(x);
  return out;
}

Cell parse_cell(const Json& j) {
  Cell c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(e.get<int>());
  return c;
}

Json word_symbols_json(const std::vector<int>& word, const Alphabet& alphabet) {
  Json out = Json::array();
  for (int v : word) {
    if (v < 0 || static_cast<std::size_t>(v) >= alphabet.size())
      throw InvalidInput("symbol index out of range for the alphabet");
    out.push_back(alphabet.symbols[static_cast<std::size_t>(v)]);
  }
  return out;
}

std::vector<int> parse_word_symbols(const Json& j, const Alphabet& alphabet) {
  std::vector<int> word;
  word.reserve(j.size());
  for (const auto& e : j) {
    const int v = alphabet.index_of(e.get<std::string>());
    if (v < 0) throw InvalidInput("unknown symbol '" + e.get<std::string>() + "'");
    word.push_back(v);
  }
  return word;
}

// One H-polytope row family as [coeffs..., rhs] string arrays.
Json rows_json(const QMatrix& A, const QVector& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < A.size(); ++i) {
    Json row = qvec_json(A[i]);
    row.push_back(rational_str(b[i]));
    out.push_back(std::move(row));
  }
  return out;
}

void parse_rows(const Json& j, int dim, QMatrix& A, QVector& b, const char* what) {
  for (const auto& row : j) {
    QVector r = parse_qvec(row);
    if (r.size() != static_cast<std::size_t>(dim) + 1)
      throw InvalidInput(std::string(what) + " row must have dim coefficients plus one rhs");
    b.push_back(r.back());
    r.pop_back();
    A.push_back(std::move(r));
  }
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json pattern_json(const Pattern& a, const Alphabet& alphabet) {
  Json out;
  out["d"] = a.shape.d;
  Json cells = Json::array();
  for (const auto& c : a.shape.cells) cells.push_back(cell_json(c));
  out["cells"] = std::move(cells);
  out["values"] = word_symbols_json(a.values, alphabet);
  return out;
}

Pattern parse_pattern(const Json& j, const Alphabet& alphabet) {
  return guarded("pattern", [&] {
    const int d = j.at("d").get<int>();
    std::vector<std::pair<Cell, int>> entries;
    const Json& cells = j.at("cells");
    const std::vector<int> values = parse_word_symbols(j.at("values"), alphabet);
    if (cells.size() != values.size())
      throw InvalidInput("pattern: cells and values differ in length");
    entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      entries.emplace_back(parse_cell(cells[i]), values[i]);
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return cell_less(x.first, y.first); });
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].first == entries[i - 1].first)
        throw InvalidInput("pattern: duplicate cell");
    Pattern a;
    std::vector<Cell> cs;
    cs.reserve(entries.size());
    for (auto& [c, v] : entries) {
      cs.push_back(std::move(c));
      a.values.push_back(v);
    }
    a.shape = Shape::of(d, std::move(cs));
    return a;
  });
}

Json hpolytope_json(const HPolytope& H) {
  Json out;
  out["dim"] = H.dim;
  out["eq"] = rows_json(H.eq_A, H.eq_b);
  out["ineq"] = rows_json(H.in_A, H.in_b);
  return out;
}

HPolytope parse_hpolytope(const Json& j) {
  return guarded("H-polytope", [&] {
    HPolytope H;
    H.dim = j.at("dim").get<int>();
    if (H.dim < 0) throw InvalidInput("H-polytope: negative dimension");
    parse_rows(j.at("eq"), H.dim, H.eq_A, H.eq_b, "equality");
    parse_rows(j.at("ineq"), H.dim, H.in_A, H.in_b, "inequality");
    return H;
  });
}

Json vpolytope_json(const VPolytope& V) {
  Json out;
  out["dim"] = V.dim;
  Json verts = Json::array();
  for (const auto& v : V.vertices) verts.push_back(qvec_json(v));
  out["vertices"] = std::move(verts);
  return out;
}

VPolytope parse_vpolytope(const Json& j) {
  return guarded("V-polytope", [&] {
    const int dim = j.at("dim").get<int>();
    if (dim < 0) throw InvalidInput("V-polytope: negative dimension");
    std::vector<QVector> pts;
    for (const auto& row : j.at("vertices")) {
      QVector v = parse_qvec(row);
      if (v.size() != static_cast<std::size_t>(dim))
        throw InvalidInput("V-polytope: vertex has wrong length");
      pts.push_back(std::move(v));
    }
    return make_vpolytope(dim, std::move(pts));
  });
}

Json measure_json(const MeasureVector& mu) {
  Json out;
  out["d"] = mu.index.d;
  out["n"] = mu.index.n;
  out["values"] = qvec_json(mu.values);
  return out;
}

MeasureVector parse_measure(const Json& j, const Alphabet& alphabet, const Caps& caps) {
  return guarded("measure", [&] {
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    PatternIndex ix = PatternIndex::make(d, n, alphabet, caps);
    return make_measure(std::move(ix), parse_qvec(j.at("values")));
  });
}

Json constraints_json(const std::vector<InvarianceConstraint>& cs, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json e;
    Json cells = Json::array();
    for (const auto& cell : c.E.cells) cells.push_back(cell_json(cell));
    e["E"] = std::move(cells);
    e["a"] = pattern_json(c.a, alphabet);
    e["u"] = cell_json(c.u);
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    out.push_back(std::move(e));
  }
  return out;
}

Json chain_json(const MarkovChain& chain) {
  Json out;
  Json states = Json::array();
  for (const auto& w : chain.states) states.push_back(word_symbols_json(w, chain.alphabet));
  out["states"] = std::move(states);
  Json P = Json::array();
  for (const auto& row : chain.P) P.push_back(qvec_json(row));
  out["P"] = std::move(P);
  out["pi"] = qvec_json(chain.pi);
  return out;
}

MarkovChain parse_chain(const Json& j, const Alphabet& alphabet) {
  return guarded("chain", [&] {
    MarkovChain chain;
    chain.alphabet = alphabet;
    for (const auto& s : j.at("states"))
      chain.states.push_back(parse_word_symbols(s, alphabet));
    const std::size_t count = chain.states.size();
    if (count == 0) throw InvalidInput("chain: no states");
    const std::size_t len = chain.states[0].size();
    if (len % 2 != 0) throw InvalidInput("chain: state words must have even length");
    for (const auto& s : chain.states)
      if (s.size() != len) throw InvalidInput("chain: state words differ in length");
    chain.n = static_cast<int>(len / 2);
    for (const auto& row : j.at("P")) {
      chain.P.push_back(parse_qvec(row));
      if (chain.P.back().size() != count) throw InvalidInput("chain: P row has wrong length");
    }
    if (chain.P.size() != count) throw InvalidInput("chain: P is not square");
    chain.pi = parse_qvec(j.at("pi"));
    if (chain.pi.size() != count) throw InvalidInput("chain: pi has wrong length");
    Rational mass = 0;
    for (const auto& p : chain.pi) {
      if (p < 0) throw InvalidInput("chain: negative stationary mass");
      mass += p;
    }
    if (mass != 1) throw InvalidInput("chain: stationary vector does not sum to 1");
    for (std::size_t i = 0; i < count; ++i) {
      Rational row = 0;
      for (const auto& p : chain.P[i]) {
        if (p < 0) throw InvalidInput("chain: negative transition probability");
        row += p;
      }
      if (chain.pi[i] != 0 && row != 1)
        throw InvalidInput("chain: P row with positive mass does not sum to 1");
    }
    for (std::size_t t = 0; t < count; ++t) {
      Rational acc = 0;
      for (std::size_t s = 0; s < count; ++s) acc += chain.pi[s] * chain.P[s][t];
      if (acc != chain.pi[t]) throw InvalidInput("chain: pi is not stationary");
    }
    return chain;
  });
}

Json classify_json(const ClassifyReport& report, const Alphabet& alphabet) {
  Json out;
  out["matched"] = report.matched;
  out["vertices"] = vpolytope_json(report.vertices);
  Json orbits = Json::array();
  for (const auto& o : report.orbits) orbits.push_back(word_symbols_json(o.word, alphabet));
  out["orbits"] = std::move(orbits);
  Json pairs = Json::array();
  for (const auto& [v, o] : report.pairs) pairs.push_back(Json::array({v, o}));
  out["pairs"] = std::move(pairs);
  out["unmatched_vertices"] = report.unmatched_vertices;
  out["unmatched_orbits"] = report.unmatched_orbits;
  return out;
}

Json refinement_json(const std::vector<RefinementRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["k"] = r.k;
    row["vertices"] = r.vertices;
    row["equal_to_previous"] = r.equal_to_previous;
    out.push_back(std::move(row));
  }
  return out;
}

Json forbidden_json(const ForbiddenSet& L, const Alphabet& alphabet) {
  Json out;
  out["d"] = L.d;
  Json pats = Json::array();
  for (const auto& p : L.patterns) pats.push_back(pattern_json(p, alphabet));
  out["patterns"] = std::move(pats);
  return out;
}

ForbiddenSet parse_forbidden(const Json& j, const Alphabet& alphabet) {
  return guarded("forbidden set", [&] {
    ForbiddenSet L;
    L.d = j.at("d").get<int>();
    if (L.d < 1) throw InvalidInput("forbidden set: dimension must be >= 1");
    for (const auto& p : j.at("patterns")) {
      L.patterns.push_back(parse_pattern(p, alphabet));
      if (L.patterns.back().shape.d != L.d)
        throw InvalidInput("forbidden set: pattern dimension mismatch");
    }
    return L;
  });
}

Json polytope_chain_json(const PolytopeChain& chain) {
  Json out;
  out["symbols"] = chain.symbols;
  Json levels = Json::array();
  for (const auto& level : chain.levels) levels.push_back(vpolytope_json(level));
  out["levels"] = std::move(levels);
  return out;
}

PolytopeChain parse_polytope_chain(const Json& j) {
  return guarded("polytope chain", [&] {
    PolytopeChain chain;
    chain.symbols = j.at("symbols").get<int>();
    for (const auto& level : j.at("levels")) chain.levels.push_back(parse_vpolytope(level));
    validate_polytope_chain(chain);
    return chain;
  });
}

Json language_json(const WordLanguage& lang) {
  Json out;
  out["N"] = lang.N;
  Json words = Json::array();
  for (const auto& w : lang.words) words.push_back(w);
  out["words"] = std::move(words);
  return out;
}

WordLanguage parse_language(const Json& j) {
  return guarded("language", [&] {
    WordLanguage lang;
    lang.N = j.at("N").get<std::uint64_t>();
    if (lang.N == 0) throw InvalidInput("language: N must be positive");
    for (const auto& w : j.at("words")) {
      Word word = w.get<Word>();
      if (word.size() != lang.N) throw InvalidInput("language: word length differs from N");
      for (int s : word)
        if (s < 1) throw InvalidInput("language: symbols are 1-based positive");
      lang.words.push_back(std::move(word));
    }
    std::sort(lang.words.begin(), lang.words.end());
    lang.words.erase(std::unique(lang.words.begin(), lang.words.end()), lang.words.end());
    return lang;
  });
}

Json substitution_json(const SubstitutionSystem& S) {
  Json out;
  out["types"] = S.types;
  Json M = Json::array();
  for (const auto& row : S.M) {
    Json r = Json::array();
    for (const auto& e : row) {
      if (!e.fits_slong_p()) throw InvalidInput("substitution: count too large to serialize");
      r.push_back(static_cast<std::int64_t>(e.get_si()));
    }
    M.push_back(std::move(r));
  }
  out["M"] = std::move(M);
  return out;
}

SubstitutionSystem parse_substitution(const Json& j) {
  return guarded("substitution system", [&] {
    std::vector<std::string> types = j.at("types").get<std::vector<std::string>>();
    std::vector<ZVector> M;
    for (const auto& row : j.at("M")) {
      ZVector r;
      for (const auto& e : row) r.push_back(Integer(e.get<std::int64_t>()));
      M.push_back(std::move(r));
    }
    return make_substitution(std::move(types), std::move(M));
  });
}

Json quadratic_json(const QuadraticNumber& x) {
  Json out;
  out["exact"] = to_exact_string(x);
  out["decimal"] = to_decimal_string(x, 15);
  return out;
}

Json perron_json(const PerronResult& P, const SubstitutionSystem& S) {
  Json out;
  out["exact_mode"] = P.exact;
  Json freq = Json::array();
  if (P.exact) {
    out["root"] = quadratic_json(P.root);
    for (std::size_t i = 0; i < P.freq.size(); ++i) {
      Json f = quadratic_json(P.freq[i]);
      f["type"] = S.types[i];
      freq.push_back(std::move(f));
    }
  } else {
    for (std::size_t i = 0; i < P.bounds.size(); ++i) {
      Json f;
      f["type"] = S.types[i];
      f["lo"] = rational_str(P.bounds[i].first);
      f["hi"] = rational_str(P.bounds[i].second);
      freq.push_back(std::move(f));
    }
  }
  out["frequencies"] = std::move(freq);
  return out;
}

}  // namespace shiftpoly
