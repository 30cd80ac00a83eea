#include "reebsnake/generator.hpp"

namespace reebsnake {

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  return ratio(num(rng), den(rng));
}

}  // namespace

GeneratedPolynomial generate_polynomial(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeneratedPolynomial out;
  out.seed = seed;
  out.m = std::uniform_int_distribution<int>(1, 3)(rng);

  BivariatePolynomial a = BivariatePolynomial::x();
  std::bernoulli_distribution keep(0.5);
  for (int deg = 2; deg <= 3; ++deg) {
    for (int j = 0; j <= deg && j < out.m; ++j) {
      if (keep(rng)) a += BivariatePolynomial::monomial(small_rational(rng), deg - j, j);
    }
  }
  BivariatePolynomial b = BivariatePolynomial::monomial(Rational(1), 0, out.m);
  for (int k = 1; k <= 3; ++k) {
    if (keep(rng)) b -= BivariatePolynomial::monomial(small_rational(rng), k, 0);
  }
  out.f = a * a + b * b;
  return out;
}

}  // namespace reebsnake
