#include "shiftpoly/rational.hpp"

#include <cctype>

#include "shiftpoly/errors.hpp"

namespace shiftpoly {

Rational rational_of(long num, long den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  // mpq set_str accepts whitespace and some looser forms; validate shape first.
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  if (!digits(i)) throw InvalidInput("bad rational literal: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw InvalidInput("bad rational literal: " + s);
    ++i;
    if (!digits(i) || i != s.size()) throw InvalidInput("bad rational literal: " + s);
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw InvalidInput("bad rational literal: " + s);
  if (q.get_den() == 0) throw InvalidInput("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

ZVector primitive_integer(const QVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  ZVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * l;
    z[i] = scaled.get_num();  // den is 1 after scaling by the lcm
  }
  primitive_reduce(z);
  return z;
}

void primitive_reduce(ZVector& v) {
  Integer g = 0;
  for (const auto& z : v) g = gcd(g, z);
  if (g == 0 || g == 1) return;
  for (auto& z : v) z /= g;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const ZVector& a, const ZVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool qvec_less(const QVector& a, const QVector& b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace shiftpoly
