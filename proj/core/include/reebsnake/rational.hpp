#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reebsnake {

/// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact "p/q" text; the denominator is always printed.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);

/// n/d in canonical form; d must be nonzero.
Rational ratio(long n, long d);

/// 2^k for any integer k.
Rational pow2(long k);

Rational abs(const Rational& q);
int sign(const Rational& q);

Rational midpoint(const Rational& a, const Rational& b);

/// Dyadic rational with the smallest denominator strictly inside (a, b).
/// Small sample points keep the specialised polynomials small.
Rational simplest_between(const Rational& a, const Rational& b);

double to_double(const Rational& q);

}  // namespace reebsnake
