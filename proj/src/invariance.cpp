#include "shiftpoly/invariance.hpp"

#include <algorithm>

#include "shiftpoly/errors.hpp"
#include "shiftpoly/linalg.hpp"
#include "shiftpoly/parallel.hpp"

namespace shiftpoly {

namespace {

// Shifts u with nonempty overlap cube ∩ (cube + u), in lex order, 0 excluded.
std::vector<Cell> admissible_shifts(int d, int n) {
  std::vector<Cell> out;
  Cell u(static_cast<std::size_t>(d), -2 * n);
  if (n == 0) return out;
  while (true) {
    bool zero = true;
    for (int x : u)
      if (x != 0) zero = false;
    if (!zero) out.push_back(u);
    int pos = d - 1;
    while (pos >= 0 && u[static_cast<std::size_t>(pos)] == 2 * n) {
      u[static_cast<std::size_t>(pos)] = -2 * n;
      --pos;
    }
    if (pos < 0) break;
    ++u[static_cast<std::size_t>(pos)];
  }
  return out;
}

// cube ∩ (cube + u): the cells of the index cube whose translate by -u stays
// inside the cube.
Shape overlap_shape(const Shape& lambda, const Cell& u, int n) {
  std::vector<Cell> cells;
  for (const auto& c : lambda.cells) {
    bool ok = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] - u[i] < -n || c[i] - u[i] > n) ok = false;
    if (ok) cells.push_back(c);
  }
  Shape s;
  s.d = lambda.d;
  s.cells = std::move(cells);
  return s;
}

InvarianceConstraint make_constraint(const PatternIndex& ix, const Pattern& a, const Cell& u) {
  InvarianceConstraint c;
  c.E = a.shape;
  c.a = a;
  c.u = u;
  c.lhs = cylinder_members(a, ix);
  c.rhs = cylinder_members(translate_pattern(a, u), ix);
  return c;
}

std::string describe(const InvarianceConstraint& c, const Alphabet& alph) {
  std::string s = "E={";
  for (std::size_t i = 0; i < c.E.cells.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t j = 0; j < c.E.cells[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(c.E.cells[i][j]);
    }
    s += ")";
  }
  s += "}, a=";
  for (int v : c.a.values) s += alph.symbols[static_cast<std::size_t>(v)];
  s += ", u=(";
  for (std::size_t j = 0; j < c.u.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(c.u[j]);
  }
  s += ")";
  return s;
}

}  // namespace

std::vector<InvarianceConstraint> generator_constraints(const PatternIndex& ix,
                                                        const Caps& caps) {
  std::vector<InvarianceConstraint> out;
  if (ix.n == 0) return out;
  for (int i = 0; i < ix.d; ++i) {
    Cell u(static_cast<std::size_t>(ix.d), 0);
    u[static_cast<std::size_t>(i)] = 1;
    Shape E = overlap_shape(ix.lambda, u, ix.n);
    for (const auto& a : enumerate_patterns(ix.alphabet, E, caps))
      out.push_back(make_constraint(ix, a, u));
  }
  return out;
}

std::vector<InvarianceConstraint> full_constraints(const PatternIndex& ix, const Caps& caps) {
  const std::size_t cube = ix.lambda.size();
  if (cube > 20)
    throw CapExceeded("max_triples",
                      "full family over 2^" + std::to_string(cube) + " sub-shapes");
  const std::uint64_t n_subsets = std::uint64_t{1} << cube;

  // Count before materializing.
  std::uint64_t triples = 0;
  std::vector<Cell> shifts = admissible_shifts(ix.d, ix.n);
  for (std::uint64_t mask = 1; mask < n_subsets; ++mask) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < cube; ++i)
      if (mask & (std::uint64_t{1} << i)) cells.push_back(ix.lambda.cells[i]);
    std::uint64_t n_shift = 0;
    for (const auto& u : shifts) {
      bool ok = true;
      for (const auto& c : cells)
        for (std::size_t i = 0; i < c.size() && ok; ++i)
          if (c[i] - u[i] < -ix.n || c[i] - u[i] > ix.n) ok = false;
      if (ok) ++n_shift;
    }
    if (n_shift == 0) continue;
    std::uint64_t pats = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) pats *= ix.alphabet.size();
    triples += pats * n_shift;
    if (triples > caps.max_triples)
      throw CapExceeded("max_triples", "full invariance family exceeds " +
                                           std::to_string(caps.max_triples) + " equations");
  }

  std::vector<InvarianceConstraint> out;
  out.reserve(triples);
  for (std::uint64_t mask = 1; mask < n_subsets; ++mask) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < cube; ++i)
      if (mask & (std::uint64_t{1} << i)) cells.push_back(ix.lambda.cells[i]);
    Shape E;
    E.d = ix.d;
    E.cells = cells;  // subsequence of sorted cells stays sorted
    std::vector<Cell> ok_shifts;
    for (const auto& u : shifts) {
      bool ok = true;
      for (const auto& c : cells)
        for (std::size_t i = 0; i < c.size() && ok; ++i)
          if (c[i] - u[i] < -ix.n || c[i] - u[i] > ix.n) ok = false;
      if (ok) ok_shifts.push_back(u);
    }
    if (ok_shifts.empty()) continue;
    for (const auto& u : ok_shifts)
      for (const auto& a : enumerate_patterns(ix.alphabet, E, caps))
        out.push_back(make_constraint(ix, a, u));
  }
  return out;
}

QVector constraint_row(const InvarianceConstraint& c, std::size_t dim) {
  QVector row(dim, Rational(0));
  for (auto i : c.lhs) row[i] += 1;
  for (auto i : c.rhs) row[i] -= 1;
  return row;
}

HPolytope build_Iloc(const PatternIndex& ix, const Caps& caps) {
  const std::size_t dim = ix.count();
  HPolytope H;
  H.dim = static_cast<int>(dim);
  H.eq_A.push_back(QVector(dim, Rational(1)));
  H.eq_b.push_back(Rational(1));
  for (const auto& c : generator_constraints(ix, caps)) {
    H.eq_A.push_back(constraint_row(c, dim));
    H.eq_b.push_back(Rational(0));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    QVector row(dim, Rational(0));
    row[i] = -1;
    H.in_A.push_back(std::move(row));
    H.in_b.push_back(Rational(0));
  }
  return H;
}

std::optional<std::string> first_violation(const MeasureVector& mu, const Caps& caps) {
  for (const auto& c : full_constraints(mu.index, caps)) {
    Rational lhs = 0, rhs = 0;
    for (auto i : c.lhs) lhs += mu.values[i];
    for (auto i : c.rhs) rhs += mu.values[i];
    if (lhs != rhs) return describe(c, mu.index.alphabet);
  }
  return std::nullopt;
}

bool is_locally_invariant(const MeasureVector& mu, const Caps& caps) {
  return !first_violation(mu, caps).has_value();
}

EquivalenceReport generator_equivalence(const PatternIndex& ix, const Caps& caps) {
  const std::size_t dim = ix.count();
  EquivalenceReport rep;

  RowBasis gen(dim);
  for (const auto& c : generator_constraints(ix, caps)) gen.add(constraint_row(c, dim));
  rep.generator_rank = gen.rank();

  // Maximal-overlap rows over all shifts must not enlarge the row space.
  RowBasis closure(dim);
  for (const auto& r : gen.rows()) closure.add(r);
  bool spans = true;
  for (const auto& u : admissible_shifts(ix.d, ix.n)) {
    Shape Eu = overlap_shape(ix.lambda, u, ix.n);
    for (const auto& a : enumerate_patterns(ix.alphabet, Eu, caps)) {
      QVector row = constraint_row(make_constraint(ix, a, u), dim);
      if (!gen.in_span(row)) spans = false;
      closure.add(row);
    }
  }
  rep.closure_rank = closure.rank();
  rep.spans_match = spans && rep.closure_rank == rep.generator_rank;

  // Cylinder partition identity: each full-family equation is the sum over
  // all extensions of its pattern to the maximal overlap of the same shift.
  std::vector<InvarianceConstraint> full = full_constraints(ix, caps);
  rep.full_triples = full.size();
  std::vector<char> ok(full.size(), 0);
  par::for_each_index(full.size(), [&](std::size_t t) {
    const auto& c = full[t];
    Shape Eu = overlap_shape(ix.lambda, c.u, ix.n);
    std::vector<Cell> free_cells;
    for (const auto& cell : Eu.cells)
      if (!c.E.contains(cell)) free_cells.push_back(cell);
    std::vector<std::uint64_t> lhs_sum, rhs_sum;
    std::vector<int> digits(free_cells.size(), 0);
    const std::size_t m = ix.alphabet.size();
    while (true) {
      Pattern ext;
      std::vector<Cell> cells = c.E.cells;
      cells.insert(cells.end(), free_cells.begin(), free_cells.end());
      std::vector<int> vals = c.a.values;
      for (int dgt : digits) vals.push_back(dgt);
      // Re-sort cells with their values to form a valid pattern.
      std::vector<std::size_t> ord(cells.size());
      for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
      std::sort(ord.begin(), ord.end(),
                [&](std::size_t x, std::size_t y) { return cell_less(cells[x], cells[y]); });
      ext.shape.d = ix.d;
      for (auto i : ord) {
        ext.shape.cells.push_back(cells[i]);
        ext.values.push_back(vals[i]);
      }
      for (auto idx : cylinder_members(ext, ix)) lhs_sum.push_back(idx);
      for (auto idx : cylinder_members(translate_pattern(ext, c.u), ix)) rhs_sum.push_back(idx);
      std::size_t pos = digits.size();
      while (pos > 0) {
        --pos;
        if (digits[pos] + 1 < static_cast<int>(m)) {
          ++digits[pos];
          break;
        }
        digits[pos] = 0;
      }
      bool wrapped = true;
      for (int dgt : digits)
        if (dgt != 0) wrapped = false;
      if (wrapped) break;
    }
    std::sort(lhs_sum.begin(), lhs_sum.end());
    std::sort(rhs_sum.begin(), rhs_sum.end());
    ok[t] = (lhs_sum == c.lhs && rhs_sum == c.rhs) ? 1 : 0;
  });
  rep.subset_identity_ok = std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
  rep.equal = rep.spans_match && rep.subset_identity_ok;
  return rep;
}

}  // namespace shiftpoly
