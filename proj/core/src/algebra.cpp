#include "reebsnake/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

#include "reebsnake/error.hpp"

namespace reebsnake {
namespace {

// Images mod a word-sized prime decide coprimality quickly: if p does not
// divide lc(a), deg gcd(a mod p, b mod p) >= deg gcd(a, b).
constexpr std::uint64_t kPrimes[] = {2147483629ULL, 2147483587ULL};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

std::optional<std::vector<std::uint64_t>> reduce_mod(const UnivariatePolynomial& a, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (const auto& c : a.coefficients()) {
    std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    out.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), p) * inverse_mod(den, p) % p);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  while (!b.empty()) {
    const std::uint64_t inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t q = a.back() * inv % p;
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + (p - q) * b[i]) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool certainly_coprime(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.degree() < 1 || b.is_zero()) return false;
  for (std::uint64_t p : kPrimes) {
    auto ra = reduce_mod(a, p);
    auto rb = reduce_mod(b, p);
    if (!ra || !rb || static_cast<int>(ra->size()) != a.degree() + 1 || rb->empty()) continue;
    if (gcd_degree_mod(*ra, *rb, p) == 0) return true;
  }
  return false;
}

// A polynomial in y whose coefficients live in Q[x].
using PolyY = std::vector<UnivariatePolynomial>;

void trim(PolyY& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const PolyY& p) { return static_cast<int>(p.size()) - 1; }

PolyY scale(const PolyY& p, const UnivariatePolynomial& c) {
  PolyY out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(v * c);
  trim(out);
  return out;
}

PolyY divide_coefficients(const PolyY& p, const UnivariatePolynomial& c) {
  PolyY out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(exact_quotient(v, c));
  trim(out);
  return out;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
PolyY prem(const PolyY& a, const PolyY& b) {
  PolyY r = a;
  const int db = deg(b);
  const UnivariatePolynomial& lcb = b.back();
  int e = deg(a) - db + 1;
  while (deg(r) >= db && !r.empty()) {
    const int d = deg(r) - db;
    const UnivariatePolynomial lead = r.back();
    for (auto& v : r) v = v * lcb;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(j + d)] -= lead * b[static_cast<size_t>(j)];
    trim(r);
    --e;
  }
  if (e > 0) {
    const UnivariatePolynomial f = pow(lcb, static_cast<unsigned>(e));
    r = scale(r, f);
  }
  return r;
}

UnivariatePolynomial subresultant(PolyY a, PolyY b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) throw Error(ErrorCode::ZeroPolynomial, "resultant of a zero polynomial");
  int sign = 1;
  if (deg(a) < deg(b)) {
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -1;
    std::swap(a, b);
  }
  if (deg(b) == 0) {
    UnivariatePolynomial r = pow(b[0], static_cast<unsigned>(deg(a)));
    return sign < 0 ? -r : r;
  }
  const UnivariatePolynomial one = UnivariatePolynomial::constant(Rational(1));
  UnivariatePolynomial g = one;
  UnivariatePolynomial h = one;
  for (;;) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    PolyY r = prem(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    b = divide_coefficients(r, g * pow(h, static_cast<unsigned>(delta)));
    g = a.back();
    if (delta > 0) h = exact_quotient(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    if (deg(b) == 0) {
      const int da = deg(a);
      UnivariatePolynomial res =
          exact_quotient(pow(b[0], static_cast<unsigned>(da)), pow(h, static_cast<unsigned>(da - 1)));
      return sign < 0 ? -res : res;
    }
  }
}

UnivariatePolynomial content(const PolyY& p) {
  UnivariatePolynomial c;
  for (const auto& v : p) {
    c = gcd(c, v);
    if (c.degree() == 0) break;
  }
  return c;
}

PolyY primitive(const PolyY& p) {
  if (p.empty()) return p;
  return divide_coefficients(p, content(p));
}

BivariatePolynomial normalize_leading(const BivariatePolynomial& p) {
  if (p.is_zero()) return p;
  auto coeffs = p.y_coefficients();
  const Rational lc = coeffs.back().leading();
  return p * Rational(1 / lc);
}

}  // namespace

namespace {

void check_resultant_args(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of a zero polynomial");
  if (f.degree_in(Variable::Y) <= 0 && g.degree_in(Variable::Y) <= 0) {
    throw Error(ErrorCode::BothConstantInY, "both polynomials are constant in y");
  }
}

Rational power(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Resultant of two nonzero univariate polynomials with their actual degrees.
Rational resultant(UnivariatePolynomial a, UnivariatePolynomial b) {
  Rational acc(1);
  while (true) {
    if (a.degree() == 0) return acc * power(a.leading(), b.degree());
    if (b.degree() == 0) return acc * power(b.leading(), a.degree());
    UnivariatePolynomial r = divmod(a, b).second;
    if (r.is_zero()) return Rational(0);
    if ((a.degree() * b.degree()) % 2 == 1) acc = -acc;
    acc *= power(b.leading(), a.degree() - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

int max_x_degree(const std::vector<UnivariatePolynomial>& c) {
  int d = 0;
  for (const auto& p : c) d = std::max(d, p.degree());
  return d;
}

}  // namespace

UnivariatePolynomial resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  check_resultant_args(f, g);
  const auto fc = f.y_coefficients();
  const auto gc = g.y_coefficients();
  const int n = static_cast<int>(fc.size()) - 1;
  const int m = static_cast<int>(gc.size()) - 1;
  if (n == 0 || m == 0) return subresultant(fc, gc);
  // Every Sylvester term takes m entries from f and n from g.
  const int bound = m * max_x_degree(fc) + n * max_x_degree(gc);
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    Rational x0((k % 2 == 0) ? -k / 2 : (k + 1) / 2);
    if (fc.back()(x0) == 0 || gc.back()(x0) == 0) continue;
    xs.push_back(x0);
    ys.push_back(resultant(f.at_x(x0), g.at_x(x0)));
  }
  // Newton divided differences, then expansion into the monomial basis.
  const size_t pts = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < pts; ++j) {
    for (size_t i = pts - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  }
  UnivariatePolynomial out = UnivariatePolynomial::constant(dd[pts - 1]);
  for (size_t i = pts - 1; i-- > 0;) {
    out = out * UnivariatePolynomial{Rational(-xs[i]), Rational(1)} + UnivariatePolynomial::constant(dd[i]);
  }
  return out;
}

UnivariatePolynomial resultant_y_prs(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  check_resultant_args(f, g);
  return subresultant(f.y_coefficients(), g.y_coefficients());
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (certainly_coprime(a, b) || certainly_coprime(b, a)) return UnivariatePolynomial::constant(Rational(1));
  UnivariatePolynomial u = a.monic();
  UnivariatePolynomial v = b.monic();
  while (!v.is_zero()) {
    UnivariatePolynomial r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u;
}

BivariatePolynomial gcd(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  PolyY pa = a.y_coefficients();
  PolyY pb = b.y_coefficients();
  const UnivariatePolynomial ca = content(pa);
  const UnivariatePolynomial cb = content(pb);
  const UnivariatePolynomial c = gcd(ca, cb);
  pa = divide_coefficients(pa, ca);
  pb = divide_coefficients(pb, cb);
  if (deg(pa) < deg(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    if (deg(pb) == 0) {
      pa = PolyY{UnivariatePolynomial::constant(Rational(1))};
      break;
    }
    PolyY r = prem(pa, pb);
    pa = std::move(pb);
    pb = primitive(r);
  }
  pa = scale(pa, c);
  return normalize_leading(BivariatePolynomial::from_y_coefficients(pa));
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.degree() <= 1) return p;
  return exact_quotient(p, gcd(p, p.derivative()));
}

bool is_squarefree(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0 || p.degree() <= 0;
}

namespace {

// A repeated factor of positive y-degree survives in p(x0, .) whenever the
// leading coefficient in y does not vanish at x0; repeated factors in x alone
// show up in the content.
bool squarefree_by_specialisation(const BivariatePolynomial& p) {
  const auto coeffs = p.y_coefficients();
  UnivariatePolynomial content;
  for (const auto& c : coeffs) content = gcd(content, c);
  if (content.degree() >= 1 && !is_squarefree(content)) return false;
  if (coeffs.size() < 2) return content.degree() >= 0;
  for (int x0 : {0, 1, -1, 2, -2, 3}) {
    if (coeffs.back()(Rational(x0)) == 0) continue;
    UnivariatePolynomial q = p.at_x(Rational(x0));
    if (certainly_coprime(q, q.derivative())) return true;
  }
  return false;
}

}  // namespace

BivariatePolynomial squarefree_part(const BivariatePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (squarefree_by_specialisation(p)) return p;
  const BivariatePolynomial g = gcd(gcd(p, p.partial(Variable::X)), p.partial(Variable::Y));
  return exact_quotient(p, g);
}

bool is_squarefree(const BivariatePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of the zero polynomial");
  if (squarefree_by_specialisation(p)) return true;
  const BivariatePolynomial g = gcd(gcd(p, p.partial(Variable::X)), p.partial(Variable::Y));
  return g.total_degree() <= 0;
}

BivariatePolynomial exact_quotient(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  PolyY r = a.y_coefficients();
  const PolyY d = b.y_coefficients();
  const int dd = deg(d);
  if (deg(r) < dd) {
    if (r.empty()) return {};
    throw Error(ErrorCode::InvalidArgument, "bivariate division is not exact");
  }
  PolyY q(static_cast<size_t>(deg(r) - dd) + 1);
  while (!r.empty() && deg(r) >= dd) {
    const int shift = deg(r) - dd;
    const UnivariatePolynomial t = exact_quotient(r.back(), d.back());
    q[static_cast<size_t>(shift)] = t;
    for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(j + shift)] -= t * d[static_cast<size_t>(j)];
    trim(r);
  }
  if (!r.empty()) throw Error(ErrorCode::InvalidArgument, "bivariate division is not exact");
  return BivariatePolynomial::from_y_coefficients(q);
}

}  // namespace reebsnake
