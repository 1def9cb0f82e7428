#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/rational.hpp"

namespace shiftpoly {

// Finite symbol set.  Symbols are strings; their position fixes the digit value
// used everywhere (pattern indices, de Bruijn states, JSON).
struct Alphabet {
  std::vector<std::string> symbols;

  std::size_t size() const { return symbols.size(); }
  /// -1 when the symbol is unknown.
  int index_of(const std::string& s) const;
  /// Comma-separated list, e.g. "0,1".  Symbols must be nonempty and distinct.
  static Alphabet parse(const std::string& csv);
};

bool operator==(const Alphabet& a, const Alphabet& b);

using Cell = std::vector<int>;  // point of Z^d

/// Lexicographic order on coordinate tuples.
bool cell_less(const Cell& a, const Cell& b);

// Finite subset of Z^d.  Cells are kept sorted lexicographically and distinct;
// every enumeration in the library walks cells in this order.
struct Shape {
  int d = 0;
  std::vector<Cell> cells;

  static Shape of(int d, std::vector<Cell> cells);
  std::size_t size() const { return cells.size(); }
  bool contains(const Cell& c) const;
  /// Position of c in the sorted cell list, -1 if absent.
  long position_of(const Cell& c) const;
  /// The shape E - u (domain of the shifted pattern).
  Shape translated(const Cell& u) const;
  /// True iff every cell of this shape lies in other.
  bool subset_of(const Shape& other) const;
};

bool operator==(const Shape& a, const Shape& b);

/// The cube {-n..n}^d.
Shape cube_shape(int d, int n);

// Assignment of symbols to the cells of a shape.  values[i] is the symbol index
// at shape.cells[i].
struct Pattern {
  Shape shape;
  std::vector<int> values;

  int value_at(const Cell& c) const;  // throws if c is not in the shape
};

bool operator==(const Pattern& a, const Pattern& b);

/// The shifted pattern with domain shape - u and value (v -> a(u + v)).
Pattern translate_pattern(const Pattern& a, const Cell& u);

// Bijection between full patterns on the cube {-n..n}^d and [0, |Sigma|^(2n+1)^d),
// mixed radix with the lexicographically first cell most significant.  In d=1
// a word therefore reads left to right as a base-|Sigma| numeral.
struct PatternIndex {
  int d = 0;
  int n = 0;
  Alphabet alphabet;
  Shape lambda;                       // cube_shape(d, n)
  std::vector<std::uint64_t> weight;  // radix weight per cell position

  static PatternIndex make(int d, int n, const Alphabet& alphabet, const Caps& caps = {});
  std::uint64_t count() const;
  std::uint64_t index_of(const Pattern& a) const;
  Pattern pattern_at(std::uint64_t idx) const;
};

bool operator==(const PatternIndex& a, const PatternIndex& b);

/// All patterns on the shape in index order (cap: caps.max_patterns).
std::vector<Pattern> enumerate_patterns(const Alphabet& alphabet, const Shape& shape,
                                        const Caps& caps = {});

/// Indices of all full patterns b on the index cube with b restricted to
/// a.shape equal to a; ascending.  a.shape must lie inside the cube.
std::vector<std::uint64_t> cylinder_members(const Pattern& a, const PatternIndex& index);

/// Restriction of a to a sub-shape of its domain.
Pattern restrict_pattern(const Pattern& a, const Shape& sub);

/// One-dimensional pattern spelling the word on cells 0..len-1.
Pattern word_pattern(const std::vector<int>& word);

/// Checked |Sigma|^k with overflow detection against cap.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap,
                            const char* cap_name);

// Probability vector on the full patterns of a cube, indexed by PatternIndex.
struct MeasureVector {
  PatternIndex index;
  QVector values;
};

/// Validates sizes, nonnegativity and total mass 1.
MeasureVector make_measure(PatternIndex index, QVector values);

}  // namespace shiftpoly
