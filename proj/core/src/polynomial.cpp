#include "reebsnake/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "reebsnake/error.hpp"

namespace reebsnake {

// ---------------------------------------------------------------- univariate

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

UnivariatePolynomial::UnivariatePolynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  normalize();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
  return UnivariatePolynomial(std::vector<Rational>{c});
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int UnivariatePolynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::shifted(const Rational& a) const {
  std::vector<Rational> c = coeffs_;
  if (a == 0 || c.size() <= 1) return UnivariatePolynomial(std::move(c));
  const size_t n = c.size();
  // Repeated synthetic division.
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational p(1);
  for (auto& v : out) {
    v *= p;
    p *= c;
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::reversed() const {
  std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::reflected() const {
  std::vector<Rational> out = coeffs_;
  for (size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v /= lc;
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(UnivariatePolynomial a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

std::string UnivariatePolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UnivariatePolynomial{}, a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1);
  const Rational inv_lc = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = r[static_cast<size_t>(k)];
    if (top == 0) continue;
    Rational factor = top * inv_lc;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= factor * bc[static_cast<size_t>(j)];
    q[static_cast<size_t>(k - db)] = factor;
  }
  r.resize(static_cast<size_t>(db));
  return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

UnivariatePolynomial exact_quotient(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return q;
}

UnivariatePolynomial pow(const UnivariatePolynomial& p, unsigned k) {
  UnivariatePolynomial result = UnivariatePolynomial::constant(Rational(1));
  UnivariatePolynomial base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

// ----------------------------------------------------------------- bivariate

BivariatePolynomial::BivariatePolynomial(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) { return monomial(c, 0, 0); }
BivariatePolynomial BivariatePolynomial::x() { return monomial(Rational(1), 1, 0); }
BivariatePolynomial BivariatePolynomial::y() { return monomial(Rational(1), 0, 1); }

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, int degx, int degy) {
  Terms t;
  if (c != 0) t.emplace(Exponent{degx, degy}, c);
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::from_univariate(const UnivariatePolynomial& p, Variable var) {
  Terms t;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coefficient(k);
    if (c == 0) continue;
    t.emplace(var == Variable::X ? Exponent{k, 0} : Exponent{0, k}, c);
  }
  return BivariatePolynomial(std::move(t));
}

Rational BivariatePolynomial::coefficient(int degx, int degy) const {
  auto it = terms_.find({degx, degy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BivariatePolynomial::degree_in(Variable var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, var == Variable::X ? e.first : e.second);
  return d;
}

namespace {

std::vector<Rational> powers(const Rational& v, int n) {
  std::vector<Rational> p(static_cast<size_t>(std::max(n, 0)) + 1);
  p[0] = 1;
  for (size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * v;
  return p;
}

}  // namespace

Rational BivariatePolynomial::operator()(const Rational& x, const Rational& y) const {
  const auto px = powers(x, degree_in(Variable::X));
  const auto py = powers(y, degree_in(Variable::Y));
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    acc += c * px[static_cast<size_t>(e.first)] * py[static_cast<size_t>(e.second)];
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::partial(Variable var) const {
  Terms t;
  for (const auto& [e, c] : terms_) {
    const int k = var == Variable::X ? e.first : e.second;
    if (k == 0) continue;
    Exponent ne = var == Variable::X ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
    t.emplace(ne, c * k);
  }
  return BivariatePolynomial(std::move(t));
}

UnivariatePolynomial BivariatePolynomial::at_x(const Rational& x0) const {
  const auto px = powers(x0, degree_in(Variable::X));
  std::vector<Rational> out(static_cast<size_t>(std::max(degree_in(Variable::Y), 0)) + 1);
  for (const auto& [e, c] : terms_) out[static_cast<size_t>(e.second)] += c * px[static_cast<size_t>(e.first)];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial BivariatePolynomial::at_y(const Rational& y0) const {
  const auto py = powers(y0, degree_in(Variable::Y));
  std::vector<Rational> out(static_cast<size_t>(std::max(degree_in(Variable::X), 0)) + 1);
  for (const auto& [e, c] : terms_) out[static_cast<size_t>(e.first)] += c * py[static_cast<size_t>(e.second)];
  return UnivariatePolynomial(std::move(out));
}

std::vector<UnivariatePolynomial> BivariatePolynomial::y_coefficients() const {
  const int dy = degree_in(Variable::Y);
  if (dy < 0) return {};
  std::vector<std::vector<Rational>> raw(static_cast<size_t>(dy) + 1);
  for (const auto& [e, c] : terms_) {
    auto& v = raw[static_cast<size_t>(e.second)];
    if (v.size() <= static_cast<size_t>(e.first)) v.resize(static_cast<size_t>(e.first) + 1);
    v[static_cast<size_t>(e.first)] = c;
  }
  std::vector<UnivariatePolynomial> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

BivariatePolynomial BivariatePolynomial::from_y_coefficients(const std::vector<UnivariatePolynomial>& coeffs) {
  Terms t;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (int i = 0; i <= coeffs[k].degree(); ++i) {
      const Rational c = coeffs[k].coefficient(i);
      if (c != 0) t.emplace(Exponent{i, static_cast<int>(k)}, c);
    }
  }
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::reflected_x() const {
  Terms t = terms_;
  for (auto& [e, c] : t) {
    if (e.first % 2 == 1) c = -c;
  }
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial::Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      BivariatePolynomial::Exponent e{ea.first + eb.first, ea.second + eb.second};
      t[e] += ca * cb;
    }
  }
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial operator-(BivariatePolynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || (e.first == 0 && e.second == 0)) {
      os << mag.get_str();
      wrote = true;
    }
    auto factor = [&](char v, int k) {
      if (k == 0) return;
      if (wrote) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      wrote = true;
    };
    factor('x', e.first);
    factor('y', e.second);
  }
  return os.str();
}

BivariatePolynomial pow(const BivariatePolynomial& p, unsigned k) {
  BivariatePolynomial result = BivariatePolynomial::constant(Rational(1));
  BivariatePolynomial base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

// ----------------------------------------------------------------- direction

UnitDirection::UnitDirection(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_ * c_ + s_ * s_ != 1) {
    throw Error(ErrorCode::InvalidDirection, "c^2 + s^2 != 1 for (" + reebsnake::to_string(c_) + ", " +
                                                 reebsnake::to_string(s_) + ")");
  }
}

UnitDirection UnitDirection::from_half_angle(const Rational& t) {
  const Rational t2 = t * t;
  return UnitDirection(Rational((1 - t2) / (1 + t2)), Rational(2 * t / (1 + t2)));
}

BivariatePolynomial rotate(const BivariatePolynomial& f, const UnitDirection& d) {
  if (d.c() == 1) return f;
  const BivariatePolynomial u = BivariatePolynomial::x() * d.c() - BivariatePolynomial::y() * d.s();
  const BivariatePolynomial v = BivariatePolynomial::x() * d.s() + BivariatePolynomial::y() * d.c();
  const int dx = std::max(f.degree_in(Variable::X), 0);
  const int dy = std::max(f.degree_in(Variable::Y), 0);
  std::vector<BivariatePolynomial> up{BivariatePolynomial::constant(Rational(1))};
  std::vector<BivariatePolynomial> vp{BivariatePolynomial::constant(Rational(1))};
  for (int k = 1; k <= dx; ++k) up.push_back(up.back() * u);
  for (int k = 1; k <= dy; ++k) vp.push_back(vp.back() * v);
  BivariatePolynomial out;
  for (const auto& [e, c] : f.terms()) {
    out += (up[static_cast<size_t>(e.first)] * vp[static_cast<size_t>(e.second)]) * c;
  }
  return out;
}

Rational eval(const BivariatePolynomial& f, const Rational& x, const Rational& y) { return f(x, y); }

BivariatePolynomial partial(const BivariatePolynomial& f, Variable var) { return f.partial(var); }

}  // namespace reebsnake
