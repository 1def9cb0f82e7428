#include "shiftpoly/compiler.hpp"

#include <algorithm>
#include <map>

#include "shiftpoly/errors.hpp"
#include "shiftpoly/lp.hpp"
#include "shiftpoly/parallel.hpp"
#include "shiftpoly/patterns.hpp"

namespace shiftpoly {

namespace {

void check_symbols(const Word& word, int symbols) {
  for (int s : word)
    if (s < 1 || s > symbols) throw InvalidInput("word: symbol outside 1..symbol count");
}

std::vector<std::uint64_t> count_vector(const Word& word, int symbols) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(symbols), 0);
  for (int s : word) ++counts[static_cast<std::size_t>(s - 1)];
  return counts;
}

// v scaled by N must be integral; callers guarantee it level by level.
std::vector<std::uint64_t> scaled_counts(const QVector& v, std::uint64_t N) {
  std::vector<std::uint64_t> counts(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * Rational(Integer(N));
    if (scaled.get_den() != 1 || scaled < 0)
      throw VerificationFailure("compile: extreme point does not clear the level denominator");
    counts[i] = static_cast<std::uint64_t>(scaled.get_num().get_ui());
  }
  return counts;
}

// Number of distinct arrangements of a multiset with the given counts,
// bailing out as soon as the cap is passed.
std::uint64_t multinomial_capped(const std::vector<std::uint64_t>& counts, std::uint64_t cap,
                                 const char* cap_name) {
  Integer total = 1;
  std::uint64_t placed = 0;
  for (std::uint64_t c : counts) {
    for (std::uint64_t i = 1; i <= c; ++i) {
      ++placed;
      total = total * Integer(placed) / Integer(i);  // exact: running binomial
      if (total > Integer(cap))
        throw CapExceeded(cap_name, "arrangement count exceeds the word cap");
    }
  }
  return static_cast<std::uint64_t>(total.get_ui());
}

// All distinct permutations of `sorted` (ascending), in lexicographic order.
template <typename Item>
void emit_permutations(std::vector<Item> sorted, std::vector<std::vector<Item>>& out) {
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
}

Word concat_blocks(const std::vector<Word>& blocks) {
  Word w;
  std::size_t len = 0;
  for (const auto& b : blocks) len += b.size();
  w.reserve(len);
  for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
  return w;
}

// Least common denominator over all entries of all vertices.
Integer common_denominator(const VPolytope& P) {
  Integer l = 1;
  for (const auto& v : P.vertices)
    for (const auto& e : v) l = lcm(l, e.get_den());
  return l;
}

std::uint64_t to_u64_length(const Integer& n, const char* what) {
  if (!n.fits_ulong_p()) throw CapExceeded("max_words", what);
  return static_cast<std::uint64_t>(n.get_ui());
}

// All words of length N whose frequency vector is an extreme point of C.
std::vector<Word> base_words(const VPolytope& C, std::uint64_t N, const Caps& caps) {
  const int symbols = C.dim;
  std::vector<std::vector<std::uint64_t>> targets;
  targets.reserve(C.vertices.size());
  for (const auto& v : C.vertices) targets.push_back(scaled_counts(v, N));
  std::uint64_t remaining = caps.max_words;
  std::vector<Word> words;
  for (const auto& counts : targets) {
    std::uint64_t cnt = multinomial_capped(counts, remaining, "max_words");
    remaining -= cnt;
    Word sorted;
    sorted.reserve(static_cast<std::size_t>(N));
    for (int s = 0; s < symbols; ++s)
      sorted.insert(sorted.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(s)]),
                    s + 1);
    std::vector<Word> perms;
    perms.reserve(static_cast<std::size_t>(cnt));
    emit_permutations(std::move(sorted), perms);
    words.insert(words.end(), perms.begin(), perms.end());
  }
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

QVector empirical_freq(const Word& word, int symbols) {
  if (symbols < 1) throw InvalidInput("empirical_freq: symbol count must be positive");
  if (word.empty()) throw InvalidInput("empirical_freq: empty word");
  check_symbols(word, symbols);
  auto counts = count_vector(word, symbols);
  QVector p(static_cast<std::size_t>(symbols));
  const Rational len(Integer(word.size()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rational(Integer(counts[i])) / len;
  return p;
}

void validate_polytope_chain(const PolytopeChain& chain) {
  if (chain.symbols < 1) throw InvalidInput("chain: symbol count must be positive");
  if (chain.levels.empty()) throw InvalidInput("chain: no levels");
  for (std::size_t l = 0; l < chain.levels.size(); ++l) {
    const VPolytope& P = chain.levels[l];
    if (P.dim != chain.symbols) throw InvalidInput("chain: level dimension != symbol count");
    if (P.vertices.empty()) throw InvalidInput("chain: empty level");
    for (const auto& v : P.vertices) {
      Rational sum = 0;
      for (const auto& e : v) {
        if (e < 0) throw InvalidInput("chain: level leaves the simplex (negative coordinate)");
        sum += e;
      }
      if (sum != 1) throw InvalidInput("chain: level leaves the simplex (coordinates do not sum to 1)");
    }
  }
  for (std::size_t l = 1; l < chain.levels.size(); ++l)
    for (const auto& v : chain.levels[l].vertices)
      if (!in_hull(chain.levels[l - 1].vertices, v))
        throw InvalidInput("chain not descending: a level has a vertex outside the previous level");
}

SimplexEmbedding embed_into_simplex(const VPolytope& C) {
  if (C.dim < 1) throw InvalidInput("embed_into_simplex: dimension must be positive");
  if (C.vertices.empty()) throw InvalidInput("embed_into_simplex: empty polytope");
  const std::size_t m = static_cast<std::size_t>(C.dim);
  QVector lo(m), hi(m);
  for (std::size_t j = 0; j < m; ++j) lo[j] = hi[j] = C.vertices[0][j];
  for (const auto& v : C.vertices)
    for (std::size_t j = 0; j < m; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  Rational maxext = 0;
  for (std::size_t j = 0; j < m; ++j)
    if (hi[j] - lo[j] > maxext) maxext = hi[j] - lo[j];
  // Scale so the widest extent lands exactly on 1/(2m); a single point keeps
  // scale 1.  Either way the image sits inside [0, 1/(2m)]^m, so the lifted
  // last coordinate 1 - sum stays >= 1/2.
  const Rational s =
      maxext == 0 ? Rational(1) : Rational(1) / (Rational(2 * C.dim) * maxext);
  std::vector<QVector> lifted;
  lifted.reserve(C.vertices.size());
  for (const auto& v : C.vertices) {
    QVector y(m + 1);
    Rational sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      y[j] = s * (v[j] - lo[j]);
      sum += y[j];
    }
    y[m] = Rational(1) - sum;
    lifted.push_back(std::move(y));
  }
  SimplexEmbedding E;
  E.lifted = make_vpolytope(C.dim + 1, std::move(lifted));
  E.back.M.assign(m, QVector(m + 1, Rational(0)));
  E.back.t.assign(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    E.back.M[j][j] = Rational(1) / s;
    E.back.t[j] = lo[j];
  }
  return E;
}

std::vector<WordLanguage> compile_languages(const PolytopeChain& chain, const Caps& caps,
                                            bool all_permutations) {
  validate_polytope_chain(chain);
  std::vector<WordLanguage> out;
  out.reserve(chain.levels.size());

  // Base level: least common denominator, all words hitting an extreme point.
  {
    WordLanguage base;
    base.N = to_u64_length(common_denominator(chain.levels[0]),
                           "base level denominator exceeds representable word length");
    base.words = base_words(chain.levels[0], base.N, caps);
    while (base.words.empty()) {  // unreachable for a valid level; kept as a guard
      if (base.doublings >= 62)
        throw VerificationFailure("compile: no realizing words after doubling the base length");
      base.N *= 2;
      ++base.doublings;
      base.words = base_words(chain.levels[0], base.N, caps);
    }
    out.push_back(std::move(base));
  }

  for (std::size_t level = 1; level < chain.levels.size(); ++level) {
    const WordLanguage& prev = out.back();
    const VPolytope& prev_poly = chain.levels[level - 1];
    const VPolytope& cur = chain.levels[level];
    const std::size_t K = prev_poly.vertices.size();
    const std::size_t nv = cur.vertices.size();

    // Weights of each current extreme point over the previous extreme points:
    // the lexicographically least point of {lambda >= 0, sum = 1, mix = v}.
    std::vector<QVector> weights(nv);
    par::for_each_index(nv, [&](std::size_t vi) {
      HPolytope W;
      W.dim = static_cast<int>(K);
      for (int c = 0; c < chain.symbols; ++c) {
        QVector row(K);
        for (std::size_t k = 0; k < K; ++k) row[k] = prev_poly.vertices[k][static_cast<std::size_t>(c)];
        W.eq_A.push_back(std::move(row));
        W.eq_b.push_back(cur.vertices[vi][static_cast<std::size_t>(c)]);
      }
      W.eq_A.push_back(QVector(K, Rational(1)));
      W.eq_b.push_back(Rational(1));
      for (std::size_t k = 0; k < K; ++k) {
        QVector row(K, Rational(0));
        row[k] = -1;
        W.in_A.push_back(std::move(row));
        W.in_b.push_back(Rational(0));
      }
      weights[vi] = lex_min_point(W);
    });

    Integer scale = 1;
    for (const auto& lam : weights)
      for (const auto& w : lam) scale = lcm(scale, w.get_den());
    const std::uint64_t Nprime =
        to_u64_length(scale, "weight denominator exceeds representable word length");
    const std::uint64_t N = to_u64_length(Integer(prev.N) * Integer(Nprime),
                                          "compiled word length exceeds representable range");

    // First previous-level word realizing each previous extreme point.
    std::vector<const Word*> rep(K, nullptr);
    {
      std::map<std::vector<std::uint64_t>, const Word*> first;
      for (const auto& w : prev.words) first.emplace(count_vector(w, chain.symbols), &w);
      for (std::size_t k = 0; k < K; ++k) {
        auto it = first.find(scaled_counts(prev_poly.vertices[k], prev.N));
        if (it == first.end())
          throw VerificationFailure("compile: previous level realizes no word for an extreme point");
        rep[k] = it->second;
      }
    }

    WordLanguage lang;
    lang.N = N;
    std::uint64_t remaining = caps.max_words;
    for (std::size_t vi = 0; vi < nv; ++vi) {
      std::vector<Word> blocks;
      blocks.reserve(static_cast<std::size_t>(Nprime));
      std::vector<std::uint64_t> mults(K);
      for (std::size_t k = 0; k < K; ++k) {
        Rational m = weights[vi][k] * Rational(Integer(Nprime));
        mults[k] = static_cast<std::uint64_t>(m.get_num().get_ui());
        for (std::uint64_t r = 0; r < mults[k]; ++r) blocks.push_back(*rep[k]);
      }
      std::sort(blocks.begin(), blocks.end());
      if (all_permutations) {
        // Equal-length blocks concatenate injectively, so distinct block
        // orders give distinct words and the count is the multinomial.
        std::uint64_t cnt = multinomial_capped(mults, remaining, "max_words");
        remaining -= cnt;
        std::vector<std::vector<Word>> arrangements;
        arrangements.reserve(static_cast<std::size_t>(cnt));
        emit_permutations(std::move(blocks), arrangements);
        for (const auto& arr : arrangements) lang.words.push_back(concat_blocks(arr));
      } else {
        if (remaining == 0) throw CapExceeded("max_words", "word count exceeds the word cap");
        --remaining;
        lang.words.push_back(concat_blocks(blocks));
      }
    }
    std::sort(lang.words.begin(), lang.words.end());
    out.push_back(std::move(lang));
  }
  return out;
}

bool verify_language(const WordLanguage& E, const VPolytope& C) {
  if (E.words.empty()) return C.vertices.empty();
  std::vector<QVector> freqs;
  freqs.reserve(E.words.size());
  for (const auto& w : E.words) freqs.push_back(empirical_freq(w, C.dim));
  VPolytope hull = extreme_subset(C.dim, freqs);
  for (const auto& v : hull.vertices)
    if (!in_hull(C.vertices, v)) return false;
  for (const auto& v : C.vertices)
    if (!in_hull(hull.vertices, v)) return false;
  return true;
}

bool LevelForbidden::forbidden(const Word& w) const {
  if (w.size() != static_cast<std::size_t>(3 * N))
    throw InvalidInput("forbidden: word length must be three blocks");
  check_symbols(w, symbols);
  const std::size_t n = static_cast<std::size_t>(N);
  for (std::size_t t = 0; t <= n; ++t) {
    Word a1(w.begin() + static_cast<long>(t), w.begin() + static_cast<long>(t + n));
    if (!std::binary_search(allowed.begin(), allowed.end(), a1)) continue;
    Word a2(w.begin() + static_cast<long>(t + n), w.begin() + static_cast<long>(t + 2 * n));
    if (std::binary_search(allowed.begin(), allowed.end(), a2)) return false;
  }
  return true;
}

ForbiddenSet LevelForbidden::enumerate(const Caps& caps) const {
  if (N > caps.max_words / 3)
    throw CapExceeded("max_words", "enumeration length exceeds the word cap");
  const std::uint64_t len = 3 * N;
  checked_power(static_cast<std::uint64_t>(symbols), len, caps.max_words, "max_words");
  ForbiddenSet L;
  L.d = 1;
  Word w(static_cast<std::size_t>(len), 1);
  for (;;) {
    if (forbidden(w)) {
      std::vector<int> zero_based(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) zero_based[i] = w[i] - 1;
      L.patterns.push_back(word_pattern(zero_based));
    }
    std::size_t pos = w.size();
    while (pos > 0 && w[pos - 1] == symbols) w[--pos] = 1;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return L;
}

LevelForbidden forbidden_list_for_level(const WordLanguage& E, int symbols) {
  if (symbols < 1) throw InvalidInput("forbidden_list_for_level: symbol count must be positive");
  for (const auto& w : E.words) {
    if (w.size() != static_cast<std::size_t>(E.N))
      throw InvalidInput("forbidden_list_for_level: language word length mismatch");
    check_symbols(w, symbols);
  }
  LevelForbidden L;
  L.N = E.N;
  L.symbols = symbols;
  L.allowed = E.words;
  std::sort(L.allowed.begin(), L.allowed.end());
  return L;
}

}  // namespace shiftpoly
