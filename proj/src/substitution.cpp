#include "shiftpoly/substitution.hpp"

#include <algorithm>
#include <cstddef>

#include "shiftpoly/errors.hpp"
#include "shiftpoly/linalg.hpp"

namespace shiftpoly {

namespace {

int sgn_q(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

// raw = f^2 * d with d squarefree; returns (f, d).
std::pair<Integer, Integer> extract_square(Integer raw) {
  Integer f = 1, p = 2;
  while (p * p <= raw) {
    while (raw % (p * p) == 0) {
      raw /= p * p;
      f *= p;
    }
    ++p;
  }
  return {f, raw};
}

Integer unify_D(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.b == 0) return y.D;
  if (y.b == 0) return x.D;
  if (x.D != y.D) throw InvalidInput("quadratic arithmetic: discriminant mismatch");
  return x.D;
}

QuadraticNumber from_rational(const Rational& a, const Integer& D) { return {a, Rational(0), D}; }

Integer pow10(int digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

}  // namespace

QuadraticNumber make_quadratic(const Rational& a, const Rational& b, const Integer& raw) {
  if (raw <= 0) throw InvalidInput("quadratic: discriminant must be positive");
  auto [f, d] = extract_square(raw);
  if (d == 1) return {a + b * Rational(f), Rational(0), Integer(2)};
  return {a, b * Rational(f), d};
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a + y.a, x.b + y.b, unify_D(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a - y.a, x.b - y.b, unify_D(x, y)};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Integer D = unify_D(x, y);
  return {x.a * y.a + x.b * y.b * Rational(D), x.a * y.b + x.b * y.a, D};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Integer D = unify_D(x, y);
  const Rational norm = y.a * y.a - y.b * y.b * Rational(D);
  if (norm == 0) throw InvalidInput("quadratic division by zero");
  return {(x.a * y.a - x.b * y.b * Rational(D)) / norm, (x.b * y.a - x.a * y.b) / norm, D};
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.b == 0 && y.b == 0) return x.a == y.a;
  return x.a == y.a && x.b == y.b && x.D == y.D;
}

int sign(const QuadraticNumber& x) {
  const int sa = sgn_q(x.a), sb = sgn_q(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| against |b| sqrt(D) squares to a^2 against b^2 D.
  const int c = cmp(x.a * x.a, x.b * x.b * Rational(x.D));
  if (c == 0) return 0;  // impossible for a squarefree D > 1
  return c > 0 ? sa : sb;
}

bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
  return sign(x - y) < 0;
}

std::string to_exact_string(const QuadraticNumber& x) {
  if (x.b == 0) return x.a.get_str();
  const Integer r = lcm(x.a.get_den(), x.b.get_den());
  const Integer p = Integer(x.a.get_num() * (r / x.a.get_den()));
  const Integer q = Integer(x.b.get_num() * (r / x.b.get_den()));
  std::string s = "(" + p.get_str() + (q < 0 ? "-" : "+") + Integer(abs(q)).get_str() +
                  "*sqrt(" + x.D.get_str() + "))";
  if (r != 1) s += "/" + r.get_str();
  return s;
}

std::string to_decimal_string(const QuadraticNumber& x, int digits) {
  if (digits < 1) throw InvalidInput("decimal: need at least one digit");
  if (sign(x) < 0) return "-" + to_decimal_string({-x.a, -x.b, x.D}, digits);
  const int guard = digits + 25;
  Integer scaled_sqrt;  // floor(sqrt(D) * 10^guard)
  {
    Integer t = x.D * pow10(2 * guard);
    mpz_sqrt(scaled_sqrt.get_mpz_t(), t.get_mpz_t());
  }
  const Rational t =
      x.a * Rational(pow10(digits)) + x.b * Rational(scaled_sqrt) / Rational(pow10(guard - digits));
  Integer n;  // round(t) half-up
  {
    Rational h = t + Rational(1) / Rational(2);
    mpz_fdiv_q(n.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
  }
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pow10(digits).get_mpz_t());
  std::string frac = r.get_str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  return q.get_str() + "." + frac;
}

bool certify_irrational(const QuadraticNumber& x) { return x.b != 0; }

bool is_primitive(const std::vector<ZVector>& M) {
  const std::size_t n = M.size();
  if (n == 0) return false;
  std::vector<std::vector<char>> B(n, std::vector<char>(n, 0)), P;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B[i][j] = M[i][j] > 0;
  P = B;
  const std::size_t wielandt = n * n - 2 * n + 2;
  for (std::size_t step = 1; step <= wielandt; ++step) {
    bool all = true;
    for (const auto& row : P)
      for (char v : row) all = all && v;
    if (all) return true;
    std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!P[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] |= B[k][j];
      }
    P = std::move(next);
  }
  return false;
}

SubstitutionSystem make_substitution(std::vector<std::string> types, std::vector<ZVector> M) {
  const std::size_t n = types.size();
  if (n == 0) throw InvalidInput("substitution: no tile types");
  if (M.size() != n) throw InvalidInput("substitution: matrix size != type count");
  for (const auto& row : M) {
    if (row.size() != n) throw InvalidInput("substitution: matrix is not square");
    for (const auto& e : row)
      if (e < 0) throw InvalidInput("substitution: negative count entry");
  }
  if (!is_primitive(M)) throw InvalidInput("substitution matrix is not primitive");
  return {std::move(types), std::move(M)};
}

SubstitutionSystem substitution_preset(const std::string& name) {
  if (name == "penrose-robinson")
    return make_substitution({"fat", "thin"}, {{Integer(2), Integer(1)}, {Integer(1), Integer(1)}});
  throw InvalidInput("unknown substitution preset: " + name);
}

namespace {

Rational trace(const QMatrix& A) {
  Rational t = 0;
  for (std::size_t i = 0; i < A.size(); ++i) t += A[i][i];
  return t;
}

// Monic characteristic polynomial, ascending integer coefficients
// (Faddeev-LeVerrier; divisions come out integral for an integer matrix).
ZVector char_poly(const std::vector<ZVector>& M) {
  const std::size_t n = M.size();
  QMatrix A(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rational(M[i][j]);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix Ak = A;
  Rational ck = -trace(Ak);
  c[n - 1] = ck;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) Ak[i][i] += ck;
    Ak = mat_mul(A, Ak);
    ck = -trace(Ak) / Rational(Integer(k));
    c[n - k] = ck;
  }
  ZVector out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1)
      throw VerificationFailure("characteristic polynomial came out non-integral");
    out[i] = c[i].get_num();
  }
  return out;
}

Integer poly_eval(const ZVector& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// p / (x - r) for a known root r (exact synthetic division).
ZVector deflate_linear(const ZVector& p, const Integer& r) {
  ZVector q(p.size() - 1);
  Integer carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

// Division by x^2 + alpha x + beta; returns true and the quotient on
// exact division.
bool deflate_quadratic(const ZVector& p, const Integer& alpha, const Integer& beta, ZVector& q) {
  if (p.size() < 3) return false;
  ZVector rem = p;
  q.assign(p.size() - 2, Integer(0));
  for (std::size_t i = p.size(); i-- > 3;) {
    Integer lead = rem[i];
    q[i - 2] = lead;
    rem[i] = 0;
    rem[i - 1] -= alpha * lead;
    rem[i - 2] -= beta * lead;
  }
  q[0] = rem[2];
  rem[1] -= alpha * rem[2];
  rem[0] -= beta * rem[2];
  return rem[0] == 0 && rem[1] == 0;
}

std::vector<Integer> divisors_of(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d * d != v) out.push_back(v / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Positive real roots reachable through degree <= 2 factors of the
// characteristic polynomial.  Empty when the factor search gets stuck, which
// sends the caller to interval mode.
std::vector<QuadraticNumber> positive_roots_deg2(ZVector p) {
  std::vector<QuadraticNumber> roots;
  while (p.size() > 1 && p[0] == 0) p.erase(p.begin());  // strip zero roots
  auto push_quadratic = [&](const Integer& a1, const Integer& a0) {
    // x^2 + a1 x + a0
    const Integer disc = a1 * a1 - 4 * a0;
    if (disc <= 0) return;  // no positive real root beyond what linears found
    for (int branch : {1, -1}) {
      QuadraticNumber r = make_quadratic(Rational(-a1) / Rational(2),
                                         Rational(branch) / Rational(2), disc);
      if (sign(r) > 0) roots.push_back(r);
    }
  };
  bool progress = true;
  while (progress && p.size() > 3) {
    progress = false;
    for (const Integer& d : divisors_of(p[0])) {
      for (int s : {1, -1}) {
        const Integer cand = s * d;
        if (poly_eval(p, cand) != 0) continue;
        if (cand > 0) roots.push_back(from_rational(Rational(cand), Integer(2)));
        p = deflate_linear(p, cand);
        progress = true;
        break;
      }
      if (progress) break;
    }
    if (progress || p.size() <= 3) continue;
    // Monic quadratic factors: constant divides p[0], linear coefficient
    // bounded through the Cauchy root bound.
    Integer bound = 0;
    for (const auto& c : p) bound = std::max(bound, Integer(abs(c)));
    bound = 2 * (bound + 1);
    for (const Integer& d : divisors_of(p[0])) {
      for (int s : {1, -1}) {
        const Integer beta = s * d;
        for (Integer alpha = -bound; alpha <= bound && !progress; ++alpha) {
          ZVector q;
          if (!deflate_quadratic(p, alpha, beta, q)) continue;
          push_quadratic(alpha, beta);
          p = std::move(q);
          progress = true;
        }
        if (progress) break;
      }
      if (progress) break;
    }
    if (!progress) return {};  // irreducible factor of degree >= 3 remains
  }
  while (p.size() > 1 && p[0] == 0) p.erase(p.begin());
  if (p.size() == 2) {
    const Integer r = -p[0];  // monic linear factor
    if (r > 0) roots.push_back(from_rational(Rational(r), Integer(2)));
  } else if (p.size() == 3) {
    push_quadratic(p[1], p[0]);
  }
  return roots;
}

// Kernel direction of (M - lambda I) when it is one-dimensional and strictly
// positive after normalization; that certificate pins lambda as the Perron
// root of a primitive matrix.
bool try_perron_vector(const std::vector<ZVector>& M, const QuadraticNumber& lambda,
                       std::vector<QuadraticNumber>& freq) {
  const std::size_t n = M.size();
  const Integer D = lambda.D;
  std::vector<std::vector<QuadraticNumber>> A(n, std::vector<QuadraticNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      A[i][j] = from_rational(Rational(M[i][j]), D);
      if (i == j) A[i][j] = A[i][j] - lambda;
    }
  std::vector<long> pivot_row_of_col(n, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = rank; i < n; ++i)
      if (sign(A[i][col]) != 0) {
        sel = i;
        break;
      }
    if (sel == n) continue;
    std::swap(A[rank], A[sel]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || sign(A[i][col]) == 0) continue;
      QuadraticNumber f = A[i][col] / A[rank][col];
      for (std::size_t j = 0; j < n; ++j) A[i][j] = A[i][j] - f * A[rank][j];
    }
    pivot_row_of_col[col] = static_cast<long>(rank);
    ++rank;
  }
  if (rank != n - 1) return false;
  std::size_t free_col = n;
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_row_of_col[col] < 0) free_col = col;
  std::vector<QuadraticNumber> x(n, from_rational(Rational(0), D));
  x[free_col] = from_rational(Rational(1), D);
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] < 0) continue;
    const std::size_t r = static_cast<std::size_t>(pivot_row_of_col[col]);
    x[col] = (from_rational(Rational(0), D) - A[r][free_col]) / A[r][col];
  }
  QuadraticNumber sum = from_rational(Rational(0), D);
  for (const auto& v : x) sum = sum + v;
  if (sign(sum) == 0) return false;
  freq.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    freq[i] = x[i] / sum;
    if (sign(freq[i]) <= 0) return false;
  }
  // Substitute back: M freq = lambda freq, exactly.
  for (std::size_t i = 0; i < n; ++i) {
    QuadraticNumber acc = from_rational(Rational(0), D);
    for (std::size_t j = 0; j < n; ++j)
      acc = acc + from_rational(Rational(M[i][j]), D) * freq[j];
    if (!(acc == lambda * freq[i])) return false;
  }
  return true;
}

std::vector<std::pair<Rational, Rational>> interval_frequencies(const std::vector<ZVector>& M) {
  const std::size_t n = M.size();
  const Rational target = Rational(1) / Rational(pow10(12));
  std::vector<ZVector> B = M;
  for (int iter = 0; iter < 20000; ++iter) {
    bool positive = true;
    for (const auto& row : B)
      for (const auto& e : row) positive = positive && e > 0;
    if (positive) {
      // The normalized eigenvector is a convex combination of the
      // sum-normalized columns of M^k, so per-coordinate column extremes
      // bracket it.
      ZVector colsum(n, Integer(0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) colsum[j] += B[i][j];
      std::vector<std::pair<Rational, Rational>> bounds(n);
      Rational width = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Rational lo = Rational(B[i][0]) / Rational(colsum[0]), hi = lo;
        for (std::size_t j = 1; j < n; ++j) {
          Rational v = Rational(B[i][j]) / Rational(colsum[j]);
          if (v < lo) lo = v;
          if (v > hi) hi = v;
        }
        bounds[i] = {lo, hi};
        if (hi - lo > width) width = hi - lo;
      }
      if (width <= target) return bounds;
    }
    std::vector<ZVector> next(n, ZVector(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (M[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += M[i][k] * B[k][j];
      }
    B = std::move(next);
  }
  throw VerificationFailure("interval frequency iteration did not reach the target width");
}

}  // namespace

PerronResult perron_frequencies(const SubstitutionSystem& S, bool require_exact) {
  if (!is_primitive(S.M)) throw InvalidInput("substitution matrix is not primitive");
  PerronResult out;
  for (const auto& lambda : positive_roots_deg2(char_poly(S.M))) {
    std::vector<QuadraticNumber> freq;
    if (try_perron_vector(S.M, lambda, freq)) {
      out.exact = true;
      out.freq = std::move(freq);
      out.root = lambda;
      return out;
    }
  }
  if (require_exact)
    throw InvalidInput("Perron root degree too high for exact mode");
  out.exact = false;
  out.bounds = interval_frequencies(S.M);
  return out;
}

RatioResult frequency_ratio(const SubstitutionSystem& S, std::size_t i, std::size_t j) {
  const std::size_t n = S.M.size();
  if (i >= n || j >= n) throw InvalidInput("frequency_ratio: type index out of range");
  RatioResult r;
  if (i == j) {
    r.exact = true;
    r.value = from_rational(Rational(1), Integer(2));
    return r;
  }
  PerronResult P = perron_frequencies(S);
  if (P.exact) {
    r.exact = true;
    r.value = P.freq[i] / P.freq[j];
  } else {
    r.exact = false;
    r.bounds = {P.bounds[i].first / P.bounds[j].second, P.bounds[i].second / P.bounds[j].first};
  }
  return r;
}

std::vector<ZVector> iterate_counts(const SubstitutionSystem& S, const ZVector& seed, int k) {
  const std::size_t n = S.M.size();
  if (seed.size() != n) throw InvalidInput("iterate_counts: seed size mismatch");
  bool nonzero = false;
  for (const auto& e : seed) {
    if (e < 0) throw InvalidInput("iterate_counts: negative seed entry");
    nonzero = nonzero || e > 0;
  }
  if (!nonzero) throw InvalidInput("iterate_counts: zero seed");
  if (k < 1) throw InvalidInput("iterate_counts: need at least one step");
  std::vector<ZVector> out;
  out.reserve(static_cast<std::size_t>(k));
  ZVector v = seed;
  for (int step = 0; step < k; ++step) {
    ZVector w(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += S.M[i][j] * v[j];
    v = std::move(w);
    out.push_back(v);
  }
  return out;
}

}  // namespace shiftpoly
