#include "reebsnake/roots.hpp"

#include <algorithm>

#include "reebsnake/algebra.hpp"
#include "reebsnake/error.hpp"

namespace reebsnake {
namespace {

int sign_variations(const std::vector<Integer>& c) {
  int count = 0;
  int last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Integer polynomial with the same roots as p (clears denominators).
std::vector<Integer> integral(const UnivariatePolynomial& p) {
  Integer l(1);
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
  return out;
}

void taylor_shift_one(std::vector<Integer>& c) {
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  }
}

}  // namespace

int descartes_bound(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Descartes bound of the zero polynomial");
  // q(t) = p(lo + (hi - lo) t) has its roots of (lo, hi) in (0, 1);
  // (1 + t)^n q(1 / (1 + t)) maps them onto (0, inf).
  const UnivariatePolynomial q = p.shifted(lo).scaled(hi - lo);
  std::vector<Integer> c = integral(q);
  std::reverse(c.begin(), c.end());
  taylor_shift_one(c);
  return sign_variations(c);
}

bool certainly_no_root(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  if (p(lo) == 0 || p(hi) == 0) return false;
  return descartes_bound(p, lo, hi) == 0;
}

int sturm_count(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm count of the zero polynomial");
  std::vector<UnivariatePolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UnivariatePolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  auto variations_at = [&](const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
      const int v = s.sign_at(x);
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  };
  return variations_at(lo) - variations_at(hi);
}

Rational root_bound(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  Rational m(0);
  const Rational lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coefficient(k)) / lc));
  Rational bound = m + 1;
  Rational b(1);
  while (b <= bound) b *= 2;
  return b;
}

namespace {

struct Isolator {
  const UnivariatePolynomial& p;
  std::vector<IsolatingInterval> out;

  IsolatingInterval make(const Rational& lo, const Rational& hi) const {
    return IsolatingInterval{lo, hi, p.sign_at(lo), p.sign_at(hi)};
  }

  // A rational root r inside (lo, hi): wrap it in a small interval with
  // nonzero ends, and keep exploring on both sides.
  void exact_root(const Rational& r, const Rational& lo, const Rational& hi) {
    Rational delta = std::min(r - lo, hi - r) / 4;
    while (descartes_bound(p, r - delta, r + delta) != 1 || p.sign_at(r - delta) == 0 ||
           p.sign_at(r + delta) == 0) {
      delta /= 2;
    }
    run(lo, r - delta);
    out.push_back(make(r - delta, r + delta));
    run(r + delta, hi);
  }

  // Precondition: p(lo) != 0 and p(hi) != 0.
  void run(const Rational& lo, const Rational& hi) {
    const int v = descartes_bound(p, lo, hi);
    if (v == 0) return;
    if (v == 1) {
      out.push_back(make(lo, hi));
      return;
    }
    const Rational m = midpoint(lo, hi);
    if (p(m) == 0) {
      exact_root(m, lo, hi);
      return;
    }
    run(lo, m);
    run(m, hi);
  }
};

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const UnivariatePolynomial& p, const Rational& lo,
                                             const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  if (!(lo < hi) || p.degree() == 0) return {};
  Isolator iso{p, {}};
  Rational a = lo;
  Rational b = hi;
  // Step the ends inwards off any root sitting exactly on them.
  if (p(a) == 0) {
    Rational d = (b - a) / 4;
    while (p(a + d) == 0 || descartes_bound(p, a, a + d) != 0) d /= 2;
    a += d;
  }
  if (p(b) == 0) {
    Rational d = (b - a) / 4;
    while (p(b - d) == 0 || descartes_bound(p, b - d, b) != 0) d /= 2;
    b -= d;
  }
  iso.run(a, b);
  return std::move(iso.out);
}

std::vector<IsolatingInterval> isolate_roots(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  if (p.degree() == 0) return {};
  const Rational b = root_bound(p);
  return isolate_roots(p, Rational(-b), b);
}

IsolatingInterval bisect(const IsolatingInterval& interval, const UnivariatePolynomial& p) {
  const Rational m = interval.mid();
  const int s = p.sign_at(m);
  if (s == 0) {
    const Rational d = interval.width() / 8;
    return IsolatingInterval{m - d, m + d, p.sign_at(m - d), p.sign_at(m + d)};
  }
  if (s == interval.sign_left) return IsolatingInterval{m, interval.hi, s, interval.sign_right};
  return IsolatingInterval{interval.lo, m, interval.sign_left, s};
}

IsolatingInterval refine(const IsolatingInterval& interval, const UnivariatePolynomial& p, const Rational& width) {
  IsolatingInterval cur = interval;
  while (cur.width() > width) cur = bisect(cur, p);
  return cur;
}

}  // namespace reebsnake
