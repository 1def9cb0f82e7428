#pragma once

// Compiles a finite descending chain of rational polytopes inside the
// probability simplex into word languages whose empirical-frequency hulls
// realize each level exactly, together with the scale-and-lift preprocessing
// that puts an arbitrary bounded rational polytope onto the simplex and the
// per-level forbidden-word lists cutting the compiled subshift out of the
// full shift.

#include <cstdint>
#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/geometry.hpp"
#include "shiftpoly/rational.hpp"
#include "shiftpoly/sft.hpp"

namespace shiftpoly {

// Words use 1-based symbols 1..m+1 so frequency vectors line up with simplex
// coordinates.
using Word = std::vector<int>;

// Polytopes on `symbols` coordinates, each contained in the previous one and
// all inside the simplex {p >= 0, sum p = 1}.
struct PolytopeChain {
  int symbols = 0;
  std::vector<VPolytope> levels;
};

struct WordLanguage {
  std::uint64_t N = 0;       // word length
  std::vector<Word> words;   // sorted lexicographically
  int doublings = 0;         // times N was doubled because no word hit an extreme point
};

/// Entry i-1 = (occurrences of symbol i) / length.  Throws InvalidInput on an
/// empty word or a symbol outside 1..symbols.
QVector empirical_freq(const Word& word, int symbols);

/// Throws InvalidInput unless every level lies inside the simplex and each
/// level is contained in the previous one ("chain not descending").
void validate_polytope_chain(const PolytopeChain& chain);

struct SimplexEmbedding {
  VPolytope lifted;  // inside the simplex on dim+1 coordinates
  AffineMap back;    // drops the last coordinate and undoes the scaling
};

/// Scales and translates C into the box [0, 1/(2 dim)]^dim, then lifts each
/// point x to (x, 1 - sum x).  The lift is injective and affine, so vertices
/// map to vertices; `back` maps the lifted polytope onto the original C.
SimplexEmbedding embed_into_simplex(const VPolytope& C);

/// One language per chain level.  The base length is the least common
/// denominator of the base extreme points and the base words are all words
/// whose frequency vector is an extreme point.  Each later level expresses
/// its extreme points as convex combinations of the previous level's extreme
/// points (lexicographically least basic weights), scales the weights
/// integral, and concatenates previous-level blocks in those multiplicities:
/// one canonical sorted concatenation per extreme point, or every distinct
/// block reordering when all_permutations is set.  Word counts are capped by
/// caps.max_words.
std::vector<WordLanguage> compile_languages(const PolytopeChain& chain, const Caps& caps = {},
                                            bool all_permutations = false);

/// True iff conv{empirical_freq(a) : a in E} equals C exactly (mutual
/// containment checked by LP).
bool verify_language(const WordLanguage& E, const VPolytope& C);

// Forbidden words of length 3N for one compiled level: everything that does
// not factor as b' a' a'' b'' with a', a'' language words.  Membership is a
// predicate; the explicit list is enumerable under a cap.
struct LevelForbidden {
  std::uint64_t N = 0;  // block length
  int symbols = 0;
  std::vector<Word> allowed;  // the language, sorted

  /// w must have length 3N.
  bool forbidden(const Word& w) const;

  /// All forbidden words as 1D patterns with 0-based values (enumeration
  /// space capped by caps.max_words).
  ForbiddenSet enumerate(const Caps& caps = {}) const;
};

LevelForbidden forbidden_list_for_level(const WordLanguage& E, int symbols);

}  // namespace shiftpoly
