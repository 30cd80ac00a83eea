#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reebsnake/rational.hpp"

namespace reebsnake {

/// Dense polynomial in one variable, lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  UnivariatePolynomial(std::initializer_list<Rational> coefficients);

  static UnivariatePolynomial constant(const Rational& c);
  static UnivariatePolynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  UnivariatePolynomial derivative() const;
  /// p(x + a)
  UnivariatePolynomial shifted(const Rational& a) const;
  /// p(c x)
  UnivariatePolynomial scaled(const Rational& c) const;
  /// x^n p(1/x)
  UnivariatePolynomial reversed() const;
  /// p(-x)
  UnivariatePolynomial reflected() const;
  /// Divide by the leading coefficient (zero stays zero).
  UnivariatePolynomial monic() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator*=(const Rational& c);

  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
  friend UnivariatePolynomial operator*(const Rational& c, UnivariatePolynomial a) { return a *= c; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division over Q. Throws ZeroPolynomial on b == 0.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
/// a / b, throwing InvalidArgument if the division is not exact.
UnivariatePolynomial exact_quotient(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial pow(const UnivariatePolynomial& p, unsigned k);

enum class Variable { X, Y };

/// Sparse bivariate polynomial over Q; keys are (deg_x, deg_y).
class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(Terms terms);

  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial x();
  static BivariatePolynomial y();
  static BivariatePolynomial monomial(const Rational& c, int degx, int degy);
  /// Embeds p(x) or p(y).
  static BivariatePolynomial from_univariate(const UnivariatePolynomial& p, Variable var);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int degx, int degy) const;
  int total_degree() const;
  int degree_in(Variable var) const;

  Rational operator()(const Rational& x, const Rational& y) const;

  BivariatePolynomial partial(Variable var) const;

  /// f(x0, y) as a polynomial in y.
  UnivariatePolynomial at_x(const Rational& x0) const;
  /// f(x, y0) as a polynomial in x.
  UnivariatePolynomial at_y(const Rational& y0) const;

  /// Coefficients of y^k as polynomials in x, k = 0..deg_y.
  std::vector<UnivariatePolynomial> y_coefficients() const;
  static BivariatePolynomial from_y_coefficients(const std::vector<UnivariatePolynomial>& coeffs);

  /// f(-x, y)
  BivariatePolynomial reflected_x() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Rational& c);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
  friend BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a) { return a *= c; }
  friend BivariatePolynomial operator-(BivariatePolynomial a);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ == b.terms_; }

  /// Human readable form accepted back by parse_polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

BivariatePolynomial pow(const BivariatePolynomial& p, unsigned k);

/// Rational point (c, s) on the unit circle; the projection direction.
class UnitDirection {
 public:
  /// Throws InvalidDirection unless c^2 + s^2 = 1.
  UnitDirection(Rational c, Rational s);
  /// ((1-t^2)/(1+t^2), 2t/(1+t^2)), the tan-half-angle parametrisation.
  static UnitDirection from_half_angle(const Rational& t);
  static UnitDirection identity() { return UnitDirection(Rational(1), Rational(0)); }

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }
  UnitDirection inverse() const { return UnitDirection(c_, Rational(-s_)); }

  friend bool operator==(const UnitDirection& a, const UnitDirection& b) { return a.c_ == b.c_ && a.s_ == b.s_; }

 private:
  Rational c_;
  Rational s_;
};

/// f(c x - s y, s x + c y)
BivariatePolynomial rotate(const BivariatePolynomial& f, const UnitDirection& d);

Rational eval(const BivariatePolynomial& f, const Rational& x, const Rational& y);
BivariatePolynomial partial(const BivariatePolynomial& f, Variable var);

}  // namespace reebsnake
