#include "shiftpoly/patterns.hpp"

#include <algorithm>

#include "shiftpoly/errors.hpp"

namespace shiftpoly {

int Alphabet::index_of(const std::string& s) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == s) return static_cast<int>(i);
  return -1;
}

Alphabet Alphabet::parse(const std::string& csv) {
  Alphabet a;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      a.symbols.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  a.symbols.push_back(cur);
  for (const auto& s : a.symbols)
    if (s.empty()) throw InvalidInput("alphabet contains an empty symbol: " + csv);
  for (std::size_t i = 0; i < a.symbols.size(); ++i)
    for (std::size_t j = i + 1; j < a.symbols.size(); ++j)
      if (a.symbols[i] == a.symbols[j])
        throw InvalidInput("alphabet repeats symbol '" + a.symbols[i] + "'");
  return a;
}

bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols == b.symbols; }

bool cell_less(const Cell& a, const Cell& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Shape Shape::of(int d, std::vector<Cell> cells) {
  if (d < 1) throw InvalidInput("shape dimension must be >= 1");
  for (const auto& c : cells)
    if (static_cast<int>(c.size()) != d) throw InvalidInput("shape cell has wrong arity");
  std::sort(cells.begin(), cells.end(), cell_less);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Shape s;
  s.d = d;
  s.cells = std::move(cells);
  return s;
}

bool Shape::contains(const Cell& c) const { return position_of(c) >= 0; }

long Shape::position_of(const Cell& c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c, cell_less);
  if (it != cells.end() && *it == c) return it - cells.begin();
  return -1;
}

Shape Shape::translated(const Cell& u) const {
  if (static_cast<int>(u.size()) != d) throw InvalidInput("translation vector has wrong arity");
  Shape s;
  s.d = d;
  s.cells.reserve(cells.size());
  for (const auto& c : cells) {
    Cell moved(d);
    for (int i = 0; i < d; ++i) moved[i] = c[i] - u[i];
    s.cells.push_back(std::move(moved));
  }
  // Translation preserves lexicographic order, so the cells stay sorted.
  return s;
}

bool Shape::subset_of(const Shape& other) const {
  for (const auto& c : cells)
    if (!other.contains(c)) return false;
  return true;
}

bool operator==(const Shape& a, const Shape& b) { return a.d == b.d && a.cells == b.cells; }

Shape cube_shape(int d, int n) {
  if (d < 1 || n < 0) throw InvalidInput("cube_shape: need d >= 1 and n >= 0");
  std::vector<Cell> cells;
  Cell c(d, -n);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (int i = 0; i < d; ++i) t *= static_cast<std::size_t>(2 * n + 1);
    return t;
  }();
  cells.reserve(total);
  while (true) {
    cells.push_back(c);
    int pos = d - 1;
    while (pos >= 0 && c[pos] == n) {
      c[pos] = -n;
      --pos;
    }
    if (pos < 0) break;
    ++c[pos];
  }
  // Odometer order with the last coordinate fastest is exactly lex order.
  Shape s;
  s.d = d;
  s.cells = std::move(cells);
  return s;
}

int Pattern::value_at(const Cell& c) const {
  long p = shape.position_of(c);
  if (p < 0) throw InvalidInput("pattern queried outside its shape");
  return values[static_cast<std::size_t>(p)];
}

bool operator==(const Pattern& a, const Pattern& b) {
  return a.shape == b.shape && a.values == b.values;
}

Pattern translate_pattern(const Pattern& a, const Cell& u) {
  Pattern b;
  b.shape = a.shape.translated(u);
  b.values = a.values;  // cell order is preserved by translation
  return b;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap,
                            const char* cap_name) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      throw CapExceeded(cap_name, "requested enumeration has more than " + std::to_string(cap) +
                                      " elements");
    r *= base;
  }
  if (r > cap)
    throw CapExceeded(cap_name,
                      "requested enumeration has " + std::to_string(r) + " elements");
  return r;
}

PatternIndex PatternIndex::make(int d, int n, const Alphabet& alphabet, const Caps& caps) {
  if (alphabet.size() == 0) throw InvalidInput("empty alphabet");
  PatternIndex ix;
  ix.d = d;
  ix.n = n;
  ix.alphabet = alphabet;
  ix.lambda = cube_shape(d, n);
  checked_power(alphabet.size(), ix.lambda.size(), caps.max_patterns, "max_patterns");
  ix.weight.assign(ix.lambda.size(), 1);
  for (std::size_t i = ix.lambda.size(); i-- > 1;)
    ix.weight[i - 1] = ix.weight[i] * alphabet.size();
  return ix;
}

std::uint64_t PatternIndex::count() const {
  return weight.empty() ? 1 : weight[0] * alphabet.size();
}

std::uint64_t PatternIndex::index_of(const Pattern& a) const {
  if (!(a.shape == lambda)) throw InvalidInput("index_of: pattern is not on the index cube");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] < 0 || a.values[i] >= static_cast<int>(alphabet.size()))
      throw InvalidInput("index_of: symbol out of range");
    idx += weight[i] * static_cast<std::uint64_t>(a.values[i]);
  }
  return idx;
}

Pattern PatternIndex::pattern_at(std::uint64_t idx) const {
  if (idx >= count()) throw InvalidInput("pattern_at: index out of range");
  Pattern a;
  a.shape = lambda;
  a.values.resize(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    a.values[i] = static_cast<int>(idx / weight[i]);
    idx %= weight[i];
  }
  return a;
}

bool operator==(const PatternIndex& a, const PatternIndex& b) {
  return a.d == b.d && a.n == b.n && a.alphabet == b.alphabet;
}

std::vector<Pattern> enumerate_patterns(const Alphabet& alphabet, const Shape& shape,
                                        const Caps& caps) {
  const std::uint64_t total =
      checked_power(alphabet.size(), shape.size(), caps.max_patterns, "max_patterns");
  std::vector<Pattern> out;
  out.reserve(total);
  Pattern a;
  a.shape = shape;
  a.values.assign(shape.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(a);
    // Increment as a mixed-radix numeral, last cell fastest: index order.
    std::size_t pos = shape.size();
    while (pos > 0) {
      --pos;
      if (a.values[pos] + 1 < static_cast<int>(alphabet.size())) {
        ++a.values[pos];
        break;
      }
      a.values[pos] = 0;
    }
  }
  return out;
}

std::vector<std::uint64_t> cylinder_members(const Pattern& a, const PatternIndex& index) {
  if (!a.shape.subset_of(index.lambda))
    throw InvalidInput("cylinder_members: shape leaves the index cube");
  // Base index from the fixed cells, then an odometer over the free cells.
  std::uint64_t base = 0;
  std::vector<std::uint64_t> free_weights;
  for (std::size_t i = 0; i < index.lambda.size(); ++i) {
    long p = a.shape.position_of(index.lambda.cells[i]);
    if (p >= 0) {
      int v = a.values[static_cast<std::size_t>(p)];
      if (v < 0 || v >= static_cast<int>(index.alphabet.size()))
        throw InvalidInput("cylinder_members: symbol out of range");
      base += index.weight[i] * static_cast<std::uint64_t>(v);
    } else {
      free_weights.push_back(index.weight[i]);
    }
  }
  const std::size_t k = free_weights.size();
  std::vector<std::uint64_t> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= index.alphabet.size();
  out.reserve(total);
  std::vector<int> digits(k, 0);
  for (std::uint64_t cnt = 0; cnt < total; ++cnt) {
    std::uint64_t idx = base;
    for (std::size_t i = 0; i < k; ++i)
      idx += free_weights[i] * static_cast<std::uint64_t>(digits[i]);
    out.push_back(idx);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (digits[pos] + 1 < static_cast<int>(index.alphabet.size())) {
        ++digits[pos];
        break;
      }
      digits[pos] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pattern restrict_pattern(const Pattern& a, const Shape& sub) {
  if (!sub.subset_of(a.shape)) throw InvalidInput("restrict_pattern: not a sub-shape");
  Pattern r;
  r.shape = sub;
  r.values.reserve(sub.size());
  for (const auto& c : sub.cells) r.values.push_back(a.value_at(c));
  return r;
}

Pattern word_pattern(const std::vector<int>& word) {
  std::vector<Cell> cells;
  cells.reserve(word.size());
  for (int i = 0; i < static_cast<int>(word.size()); ++i) cells.push_back({i});
  Pattern a;
  a.shape = Shape::of(1, std::move(cells));
  a.values = word;
  return a;
}

MeasureVector make_measure(PatternIndex index, QVector values) {
  if (values.size() != index.count()) throw InvalidInput("measure has wrong length");
  Rational total = 0;
  for (const auto& v : values) {
    if (v < 0) throw InvalidInput("measure has a negative entry");
    total += v;
  }
  if (total != 1) throw InvalidInput("measure does not sum to 1");
  return MeasureVector{std::move(index), std::move(values)};
}

}  // namespace shiftpoly
