#pragma once

#include "reebsnake/polynomial.hpp"
#include "reebsnake/roots.hpp"

namespace reebsnake {

/// Closed rational interval [lo, hi] for range bounds of polynomials on boxes.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& v) { return {v, v}; }
  static Interval of(const IsolatingInterval& iso) { return {iso.lo, iso.hi}; }

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  /// +1 / -1 when the sign is certain, 0 otherwise.
  int certain_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }
  Rational width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& c);
Interval power(const Interval& a, int k);
Interval hull(const Interval& a, const Interval& b);

/// Enclosure of p over [x].
Interval enclose(const UnivariatePolynomial& p, const Interval& x);
/// Enclosure of f over the box [x] x [y].
Interval enclose(const BivariatePolynomial& f, const Interval& x, const Interval& y);

}  // namespace reebsnake
