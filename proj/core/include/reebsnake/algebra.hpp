#pragma once

#include "reebsnake/polynomial.hpp"

namespace reebsnake {

/// Res_y(f, g) as a polynomial in x (Sylvester convention), from exact
/// univariate resultants at integer abscissae and interpolation. Throws
/// BothConstantInY when neither argument depends on y and ZeroPolynomial
/// when one of them is zero.
UnivariatePolynomial resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// The same resultant from the subresultant pseudo-remainder sequence over Q[x].
UnivariatePolynomial resultant_y_prs(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// Monic gcd over Q; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Gcd in Q[x, y], normalised so the leading coefficient (highest y power,
/// then highest x power) is 1.
BivariatePolynomial gcd(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// p / gcd(p, p'). Throws ZeroPolynomial.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);
bool is_squarefree(const UnivariatePolynomial& p);

/// p / gcd(p, p_x, p_y): the product of the distinct irreducible factors.
BivariatePolynomial squarefree_part(const BivariatePolynomial& p);
bool is_squarefree(const BivariatePolynomial& p);

/// a / b in Q[x, y]; throws InvalidArgument when b does not divide a.
BivariatePolynomial exact_quotient(const BivariatePolynomial& a, const BivariatePolynomial& b);

}  // namespace reebsnake
