#pragma once

#include <vector>

#include "reebsnake/polynomial.hpp"

namespace reebsnake {

/// Open interval (lo, hi) holding exactly one simple root of the polynomial
/// it was computed for; the polynomial is nonzero at both ends with
/// opposite signs.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int sign_left = 0;
  int sign_right = 0;

  Rational width() const { return hi - lo; }
  Rational mid() const { return midpoint(lo, hi); }
  bool contains(const Rational& v) const { return lo < v && v < hi; }
};

/// Upper bound on the number of roots of p in (lo, hi) by Descartes' rule
/// of signs after mapping the interval onto (0, inf). Exact when 0 or 1.
int descartes_bound(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi);

/// True when p has no root in the closed interval [lo, hi].
bool certainly_no_root(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi);

/// Number of distinct real roots in (lo, hi] from a Sturm sequence.
int sturm_count(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi);

/// Power of two strictly larger than the modulus of every complex root.
Rational root_bound(const UnivariatePolynomial& p);

/// Certified isolation of the real roots of a squarefree p inside the open
/// interval (lo, hi), sorted ascending. Throws ZeroPolynomial.
std::vector<IsolatingInterval> isolate_roots(const UnivariatePolynomial& p, const Rational& lo,
                                             const Rational& hi);
/// All real roots of a squarefree p.
std::vector<IsolatingInterval> isolate_roots(const UnivariatePolynomial& p);

/// Bisect until hi - lo <= width. The result isolates the same root.
IsolatingInterval refine(const IsolatingInterval& interval, const UnivariatePolynomial& p, const Rational& width);

/// One bisection step.
IsolatingInterval bisect(const IsolatingInterval& interval, const UnivariatePolynomial& p);

}  // namespace reebsnake
