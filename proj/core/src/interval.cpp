#include "reebsnake/interval.hpp"

#include <algorithm>
#include <vector>

namespace reebsnake {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p1 = a.lo * b.lo;
  const Rational p2 = a.lo * b.hi;
  const Rational p3 = a.hi * b.lo;
  const Rational p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Interval& a, const Rational& c) {
  if (c >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

Interval power(const Interval& a, int k) {
  if (k == 0) return Interval::point(Rational(1));
  Rational l(1);
  Rational h(1);
  for (int i = 0; i < k; ++i) {
    l *= a.lo;
    h *= a.hi;
  }
  if (k % 2 == 1) return {l, h};
  if (a.lo >= 0) return {l, h};
  if (a.hi <= 0) return {h, l};
  return {Rational(0), std::max(l, h)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval enclose(const UnivariatePolynomial& p, const Interval& x) {
  // Taylor form around the midpoint keeps the overestimate proportional to the width.
  if (p.is_zero()) return Interval::point(Rational(0));
  const Rational m = midpoint(x.lo, x.hi);
  const UnivariatePolynomial q = p.shifted(m);
  const Interval t{x.lo - m, x.hi - m};
  Interval acc = Interval::point(q.coefficient(0));
  for (int k = 1; k <= q.degree(); ++k) {
    if (q.coefficient(k) == 0) continue;
    acc = acc + power(t, k) * q.coefficient(k);
  }
  return acc;
}

Interval enclose(const BivariatePolynomial& f, const Interval& x, const Interval& y) {
  if (f.is_zero()) return Interval::point(Rational(0));
  const Rational mx = midpoint(x.lo, x.hi);
  const Rational my = midpoint(y.lo, y.hi);
  const Interval tx{x.lo - mx, x.hi - mx};
  const Interval ty{y.lo - my, y.hi - my};
  // Re-expand f around (mx, my), one y-coefficient at a time.
  auto coeffs = f.y_coefficients();
  std::vector<UnivariatePolynomial> shifted_x;
  shifted_x.reserve(coeffs.size());
  for (const auto& c : coeffs) shifted_x.push_back(c.shifted(mx));
  // Taylor shift in y of a polynomial whose coefficients are polynomials.
  const size_t n = shifted_x.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j > i; --j) shifted_x[j - 1] += shifted_x[j] * my;
  }
  const int dx = std::max(f.degree_in(Variable::X), 0);
  std::vector<Interval> px;
  std::vector<Interval> py;
  for (int k = 0; k <= dx; ++k) px.push_back(power(tx, k));
  for (size_t k = 0; k < n; ++k) py.push_back(power(ty, static_cast<int>(k)));
  Interval acc = Interval::point(Rational(0));
  for (size_t j = 0; j < n; ++j) {
    const auto& cj = shifted_x[j];
    for (int i = 0; i <= cj.degree(); ++i) {
      const Rational c = cj.coefficient(i);
      if (c == 0) continue;
      acc = acc + (px[static_cast<size_t>(i)] * py[j]) * c;
    }
  }
  return acc;
}

}  // namespace reebsnake
