#pragma once

#include <cstdint>
#include <random>

#include "reebsnake/polynomial.hpp"

namespace reebsnake {

/// f = A^2 + B^2 with A = x + (random terms of degree 2..3 and y-degree < m)
/// and B = y^m - q(x), q(0) = 0, m in {1, 2, 3}. The origin is a strict
/// local minimum and the leading coefficient in y is 1.
struct GeneratedPolynomial {
  BivariatePolynomial f;
  int m = 1;
  std::uint64_t seed = 0;
};

GeneratedPolynomial generate_polynomial(std::uint64_t seed);

}  // namespace reebsnake
