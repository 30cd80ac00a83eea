#include "reebsnake/rational.hpp"

#include "reebsnake/error.hpp"

namespace reebsnake {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational pow2(long k) {
  Rational r(1);
  if (k >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return sgn(q); }

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  mpq_div_2exp(m.get_mpq_t(), m.get_mpq_t(), 1);
  return m;
}

Rational simplest_between(const Rational& a, const Rational& b) {
  if (a < 0 && b > 0) return Rational(0);
  for (long k = 0;; ++k) {
    Rational scaled = a * pow2(k);
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    n += 1;
    Rational candidate = Rational(n) / pow2(k);
    if (candidate < b) return candidate;
  }
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace reebsnake
