#pragma once

#include <optional>
#include <vector>

#include "reebsnake/polynomial.hpp"

namespace reebsnake {

/// Zero set of df/dy: the points where level curves have a vertical tangent.
struct PolarCurve {
  BivariatePolynomial defining_polynomial;
  bool is_reduced = false;
};

/// Throws ConstantInY when f does not depend on y.
PolarCurve polar_curve(const BivariatePolynomial& f);

/// Two distinct polar roots over x0 (indices into the ascending list of
/// real roots of df/dy(x0, .)) carrying the same critical value of f.
struct CollisionWitness {
  Rational x0;
  int i = 0;
  int j = 0;
};

struct PhiInjectivity {
  bool injective = true;
  std::optional<CollisionWitness> witness;
  int colliding_abscissae = 0;
};

/// Samples x0 = x_max * 2^-k (k < samples) and -x0. Along each fibre the
/// critical values f(x0, y_i) over the real roots y_i of df/dy(x0, .) are
/// compared exactly. A collision only counts as a vertical bitangent family
/// when it shows up at min(2, samples) abscissae on the same side.
PhiInjectivity phi_injective_on_polar(const BivariatePolynomial& f, const Rational& x_max, int samples);

/// Exact comparison of critical values in one fibre; the witness when two collide.
std::optional<CollisionWitness> critical_value_collision(const BivariatePolynomial& f, const Rational& x0);

enum class Verdict { Generic, NonGenericInflection, NonGenericBitangent, NonGenericBoth };

std::string_view to_string(Verdict v);

struct GenericityCertificate {
  UnitDirection direction = UnitDirection::identity();
  bool polar_reduced = false;
  bool phi_injective = false;
  std::vector<Rational> sample_xs;  // positive abscissae; their negatives were tested too
  Verdict verdict = Verdict::Generic;
  std::optional<CollisionWitness> witness;
};

inline const Rational kDefaultXMax{1, 4};
inline constexpr int kDefaultSamples = 4;

GenericityCertificate genericity_certificate(const BivariatePolynomial& f, const UnitDirection& d,
                                             const Rational& x_max = kDefaultXMax, int samples = kDefaultSamples);

struct ScanSample {
  Rational t;
  UnitDirection direction = UnitDirection::identity();
  Verdict verdict = Verdict::Generic;
};

/// Closed range of tan-half-angle parameters, padded by one grid step.
struct NonGenericInterval {
  Rational t_lo;
  Rational t_hi;
  std::vector<Verdict> criteria;
};

struct DirectionScanReport {
  std::vector<ScanSample> samples;
  std::vector<NonGenericInterval> non_generic_intervals;
  Rational resolution;
};

struct ScanOptions {
  /// When set, directions that pass the certificate must also sweep cleanly
  /// at this level: a vertical tie counts as a bitangent and a degenerate
  /// tangency as an inflection.
  std::optional<Rational> epsilon_probe;
  Rational x_max = kDefaultXMax;
  int samples = kDefaultSamples;
};

/// t in {-1, -1 + 2/n, ..., 1}: n + 1 points covering RP^1 once.
std::vector<Rational> half_angle_grid(int n);

DirectionScanReport direction_scan(const BivariatePolynomial& f, const std::vector<Rational>& t_grid,
                                   const ScanOptions& options = {});

/// Distance from t to the nearest reported interval (nullopt when none).
std::optional<Rational> distance_to_non_generic(const DirectionScanReport& report, const Rational& t);

/// Classical bounds for a plane curve of degree n: 3n(n-2) inflections and
/// (n-1)(n-2)/2 singular points. Throw DegreeTooSmall.
long max_inflections(long n);
long max_singularities(long n);

}  // namespace reebsnake
