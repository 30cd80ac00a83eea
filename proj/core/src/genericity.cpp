#include "reebsnake/genericity.hpp"

#include <algorithm>

#include "reebsnake/algebra.hpp"
#include "reebsnake/error.hpp"
#include "reebsnake/interval.hpp"
#include "reebsnake/level_sweep.hpp"
#include "reebsnake/roots.hpp"

namespace reebsnake {

PolarCurve polar_curve(const BivariatePolynomial& f) {
  if (f.degree_in(Variable::Y) <= 0) throw Error(ErrorCode::ConstantInY, "f does not depend on y");
  PolarCurve p;
  p.defining_polynomial = f.partial(Variable::Y);
  p.is_reduced = is_squarefree(p.defining_polynomial);
  return p;
}

namespace {

// Index of the isolating interval of `roots` (for polynomial r) that
// strictly contains the range of q over the polar root `y`.
int locate_value(const UnivariatePolynomial& q, const UnivariatePolynomial& polar, IsolatingInterval y,
                 std::vector<IsolatingInterval>& roots, const UnivariatePolynomial& r) {
  for (int iter = 0; iter < 4096; ++iter) {
    Interval v = enclose(q, Interval::of(y));
    for (size_t k = 0; k < roots.size(); ++k) {
      if (roots[k].lo < v.lo && v.hi < roots[k].hi) return static_cast<int>(k);
    }
    y = bisect(y, polar);
    // Shrinking the value intervals too keeps neighbouring values apart faster.
    if (iter % 4 == 3) {
      for (auto& z : roots) z = bisect(z, r);
    }
  }
  throw Error(ErrorCode::DegenerateTangency, "critical value could not be separated");
}

}  // namespace

std::optional<CollisionWitness> critical_value_collision(const BivariatePolynomial& f, const Rational& x0) {
  UnivariatePolynomial p = f.partial(Variable::Y).at_x(x0);
  if (p.degree() < 2) return std::nullopt;
  p = squarefree_part(p);
  auto polar_roots = isolate_roots(p);
  if (polar_roots.size() < 2) return std::nullopt;
  UnivariatePolynomial q = f.at_x(x0);
  // Res_y(p(y), q(y) - z) vanishes exactly at the critical values z; z plays the x role.
  BivariatePolynomial P = BivariatePolynomial::from_univariate(p, Variable::Y);
  BivariatePolynomial Q = BivariatePolynomial::from_univariate(q, Variable::Y) - BivariatePolynomial::x();
  UnivariatePolynomial rz = resultant_y(P, Q);
  if (is_squarefree(rz)) return std::nullopt;
  UnivariatePolynomial r = squarefree_part(rz);
  auto values = isolate_roots(r);
  std::vector<int> label(polar_roots.size());
  for (size_t i = 0; i < polar_roots.size(); ++i) {
    label[i] = locate_value(q, p, polar_roots[i], values, r);
    for (size_t j = 0; j < i; ++j) {
      if (label[j] == label[i]) return CollisionWitness{x0, static_cast<int>(j), static_cast<int>(i)};
    }
  }
  return std::nullopt;
}

PhiInjectivity phi_injective_on_polar(const BivariatePolynomial& f, const Rational& x_max, int samples) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "at least one sample abscissa is required");
  if (x_max <= 0) throw Error(ErrorCode::InvalidArgument, "x_max must be positive");
  PhiInjectivity out;
  const int needed = std::min(2, samples);
  for (int sgn : {1, -1}) {
    int hits = 0;
    std::optional<CollisionWitness> first;
    for (int k = 0; k < samples; ++k) {
      Rational x0 = x_max * pow2(-k) * sgn;
      if (auto w = critical_value_collision(f, x0)) {
        ++hits;
        if (!first) first = w;
      }
    }
    out.colliding_abscissae += hits;
    if (hits >= needed && out.injective) {
      out.injective = false;
      out.witness = first;
    }
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Generic: return "Generic";
    case Verdict::NonGenericInflection: return "NonGenericInflection";
    case Verdict::NonGenericBitangent: return "NonGenericBitangent";
    case Verdict::NonGenericBoth: return "NonGenericBoth";
  }
  return "?";
}

namespace {

Verdict combine(bool inflection, bool bitangent) {
  if (inflection && bitangent) return Verdict::NonGenericBoth;
  if (inflection) return Verdict::NonGenericInflection;
  if (bitangent) return Verdict::NonGenericBitangent;
  return Verdict::Generic;
}

bool has_inflection(Verdict v) { return v == Verdict::NonGenericInflection || v == Verdict::NonGenericBoth; }
bool has_bitangent(Verdict v) { return v == Verdict::NonGenericBitangent || v == Verdict::NonGenericBoth; }

}  // namespace

GenericityCertificate genericity_certificate(const BivariatePolynomial& f, const UnitDirection& d,
                                             const Rational& x_max, int samples) {
  if (f(Rational(0), Rational(0)) != 0) throw Error(ErrorCode::NotVanishingAtOrigin, "f(0,0) must be 0");
  BivariatePolynomial g = rotate(f, d);
  GenericityCertificate c;
  c.direction = d;
  c.polar_reduced = polar_curve(g).is_reduced;
  auto phi = phi_injective_on_polar(g, x_max, samples);
  c.phi_injective = phi.injective;
  c.witness = phi.witness;
  for (int k = 0; k < samples; ++k) c.sample_xs.push_back(x_max * pow2(-k));
  c.verdict = combine(!c.polar_reduced, !c.phi_injective);
  return c;
}

std::vector<Rational> half_angle_grid(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one step");
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) out.push_back(Rational(-1) + ratio(2 * k, n));
  return out;
}

DirectionScanReport direction_scan(const BivariatePolynomial& f, const std::vector<Rational>& t_grid,
                                   const ScanOptions& options) {
  if (t_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty direction grid");
  for (size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i - 1] < t_grid[i])) throw Error(ErrorCode::InvalidArgument, "grid must be strictly increasing");
  }
  DirectionScanReport report;
  report.resolution = 0;
  for (size_t i = 1; i < t_grid.size(); ++i) report.resolution = std::max(report.resolution, Rational(t_grid[i] - t_grid[i - 1]));

  for (const auto& t : t_grid) {
    UnitDirection d = UnitDirection::from_half_angle(t);
    Verdict v = genericity_certificate(f, d, options.x_max, options.samples).verdict;
    if (v == Verdict::Generic && options.epsilon_probe) {
      try {
        sweep(rotate(f, d), *options.epsilon_probe);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NonGenericTie) v = Verdict::NonGenericBitangent;
        if (e.code() == ErrorCode::DegenerateTangency) v = Verdict::NonGenericInflection;
      }
    }
    report.samples.push_back({t, d, v});
  }

  const size_t n = t_grid.size();
  for (size_t i = 0; i < n;) {
    if (report.samples[i].verdict == Verdict::Generic) {
      ++i;
      continue;
    }
    size_t j = i;
    bool infl = false, bit = false;
    while (j < n && report.samples[j].verdict != Verdict::Generic) {
      infl |= has_inflection(report.samples[j].verdict);
      bit |= has_bitangent(report.samples[j].verdict);
      ++j;
    }
    NonGenericInterval iv;
    iv.t_lo = i > 0 ? t_grid[i - 1] : t_grid[i];
    iv.t_hi = j < n ? t_grid[j] : t_grid[j - 1];
    if (infl) iv.criteria.push_back(Verdict::NonGenericInflection);
    if (bit) iv.criteria.push_back(Verdict::NonGenericBitangent);
    auto& out = report.non_generic_intervals;
    if (!out.empty() && out.back().t_hi >= iv.t_lo) {
      out.back().t_hi = std::max(out.back().t_hi, iv.t_hi);
      for (Verdict c : iv.criteria) {
        if (std::find(out.back().criteria.begin(), out.back().criteria.end(), c) == out.back().criteria.end())
          out.back().criteria.push_back(c);
      }
    } else {
      out.push_back(iv);
    }
    i = j;
  }
  return report;
}

std::optional<Rational> distance_to_non_generic(const DirectionScanReport& report, const Rational& t) {
  std::optional<Rational> best;
  for (const auto& iv : report.non_generic_intervals) {
    Rational d = 0;
    if (t < iv.t_lo) d = iv.t_lo - t;
    if (t > iv.t_hi) d = t - iv.t_hi;
    if (!best || d < *best) best = d;
  }
  return best;
}

long max_inflections(long n) {
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "inflection bound needs degree >= 2");
  return 3 * n * (n - 2);
}

long max_singularities(long n) {
  if (n < 1) throw Error(ErrorCode::DegreeTooSmall, "singularity bound needs degree >= 1");
  return (n - 1) * (n - 2) / 2;
}

}  // namespace reebsnake
