#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "reebsnake/algebra.hpp"
#include "reebsnake/error.hpp"
#include "reebsnake/parser.hpp"
#include "reebsnake/roots.hpp"

using namespace reebsnake;

namespace {

BivariatePolynomial P(const char* s) { return parse_polynomial(s); }
Rational Q(const char* s) { return parse_rational(s); }

BivariatePolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), keep(0, 2);
  BivariatePolynomial f;
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      if (keep(rng) == 0) f += BivariatePolynomial::monomial(ratio(coef(rng), den(rng)), i, j);
    }
  }
  return f;
}

UnivariatePolynomial random_univariate(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coef(rng));
  c.emplace_back(1 + std::abs(coef(rng)));
  return UnivariatePolynomial(c);
}

}  // namespace

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(ratio(4, 4)), "1/1");
  EXPECT_EQ(to_string(ratio(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), ratio(5, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, SimplestBetweenIsStrictlyInside) {
  for (auto [a, b] : {std::pair{Q("1/3"), Q("1/2")}, {Q("-1/7"), Q("1/9")}, {Q("5"), Q("51/10")}}) {
    Rational m = simplest_between(a, b);
    EXPECT_LT(a, m);
    EXPECT_LT(m, b);
  }
}

TEST(Parser, Grammar) {
  EXPECT_EQ(P("x^2 + (y^2 - x)^2"), P("x^2+y^4-2*x*y^2+x^2"));
  EXPECT_EQ(P("y^6/6"), BivariatePolynomial::monomial(ratio(1, 6), 0, 6));
  EXPECT_EQ(P("-3/4*x*y^4"), BivariatePolynomial::monomial(ratio(-3, 4), 1, 4));
  EXPECT_EQ(P(" 2 * ( x + y ) "), P("2*x+2*y"));
  for (const char* bad : {"x^", "x+*y", "z", "(x+y", "x^-1", "x/y"}) EXPECT_THROW(P(bad), Error) << bad;
}

TEST(Parser, PrintRoundTrip) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, 5);
    EXPECT_EQ(P(f.to_string().c_str()), f) << f.to_string();
  }
}

TEST(Eval, Examples) {
  auto coste = P("x^2+(y^2-x)^2");
  EXPECT_EQ(coste(Rational(0), Rational(0)), 0);
  EXPECT_EQ(coste(Rational(1), Rational(1)), 1);
  EXPECT_EQ(P("x^2+y^2")(Q("3/5"), Q("4/5")), 1);
}

TEST(Partial, Examples) {
  EXPECT_EQ(P("x^2+(y^2-x)^2").partial(Variable::Y), P("4*y^3-4*x*y"));
  EXPECT_EQ(P("x^10+y^6/6-3*x*y^4/4+x^2*y^2").partial(Variable::Y), P("y^5-3*x*y^3+2*x^2*y"));
  EXPECT_TRUE(P("7/3").partial(Variable::Y).is_zero());
}

TEST(Rotate, Examples) {
  auto f = P("x^3*y - 2*y^2 + x");
  EXPECT_EQ(rotate(f, UnitDirection::identity()), f);
  auto circle = P("x^2+y^2");
  for (const char* t : {"1/3", "-2/7", "1"}) EXPECT_EQ(rotate(circle, UnitDirection::from_half_angle(Q(t))), circle);
  EXPECT_EQ(rotate(P("x"), UnitDirection(Q("3/5"), Q("4/5"))), P("3/5*x - 4/5*y"));
  EXPECT_THROW(UnitDirection(Q("1/2"), Q("1/2")), Error);
}

TEST(Rotate, EvaluatesAtRotatedPoint) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int k = 0; k < 10; ++k) {
    auto f = random_poly(rng, 4);
    auto d = UnitDirection::from_half_angle(ratio(num(rng), den(rng)));
    auto g = rotate(f, d);
    for (int p = 0; p < 100; ++p) {
      Rational x = ratio(num(rng), den(rng)), y = ratio(num(rng), den(rng));
      ASSERT_EQ(g(x, y), f(d.c() * x - d.s() * y, d.s() * x + d.c() * y));
    }
  }
}

TEST(Rotate, InverseRestores) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    auto f = random_poly(rng, 5);
    auto d = UnitDirection::from_half_angle(ratio(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 6)));
    EXPECT_EQ(rotate(rotate(f, d), d.inverse()), f);
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant_y(P("y^2-x"), P("y")), UnivariatePolynomial({Rational(0), Rational(-1)}));
  auto r = resultant_y(P("y-1"), P("y+1"));
  ASSERT_EQ(r.degree(), 0);
  EXPECT_NE(r.coefficient(0), 0);
  auto circle = P("x^2+y^2");
  auto res = resultant_y(circle - BivariatePolynomial::constant(1), circle.partial(Variable::Y));
  EXPECT_EQ(res(Rational(1)), 0);
  EXPECT_EQ(res(Rational(-1)), 0);
  EXPECT_NE(res(Rational(0)), 0);
  EXPECT_EQ(res.degree(), 2);
}

TEST(Resultant, MatchesSylvesterDeterminantAndPrs) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 25; ++k) {
    auto f = random_poly(rng, 5) + BivariatePolynomial::monomial(Rational(1), 0, 3);
    auto g = random_poly(rng, 4) + BivariatePolynomial::monomial(Rational(2), 0, 2);
    auto r = resultant_y(f, g);
    EXPECT_EQ(r, resultant_y_prs(f, g));
    for (int x0 = -3; x0 <= 3; ++x0) {
      auto a = f.at_x(Rational(x0)), b = g.at_x(Rational(x0));
      if (a.degree() != f.degree_in(Variable::Y) || b.degree() != g.degree_in(Variable::Y)) continue;
      EXPECT_EQ(r(Rational(x0)), oracle::sylvester_resultant(a, b)) << f.to_string() << " | " << g.to_string();
    }
  }
}

TEST(Resultant, VanishesOnConstructedCommonRoots) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 15; ++k) {
    BivariatePolynomial a;
    for (int i = 0; i <= 3; ++i) a += BivariatePolynomial::monomial(Rational(static_cast<long>(rng() % 7) - 3), i, 0);
    const auto line = BivariatePolynomial::y() - a;
    auto u = random_poly(rng, 3) + BivariatePolynomial::monomial(Rational(1), 0, 2);
    auto v = random_poly(rng, 3) + BivariatePolynomial::monomial(Rational(1), 0, 1);
    EXPECT_TRUE(resultant_y(line * u, line * v).is_zero());
  }
}

TEST(Squarefree, Examples) {
  auto p = P("y^2*(y-x^2)");
  EXPECT_FALSE(is_squarefree(p));
  auto s = squarefree_part(p);
  EXPECT_TRUE(s == P("y*(y-x^2)") || s == -P("y*(y-x^2)")) << s.to_string();
  EXPECT_TRUE(is_squarefree(P("y*(y^2-x)*(y^2-2*x)")));
  EXPECT_TRUE(is_squarefree(P("y")));
}

TEST(Squarefree, PartDividesAndIsSquarefree) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    auto a = random_univariate(rng, 2), b = random_univariate(rng, 3);
    auto p = a * a * b;
    auto s = squarefree_part(p);
    EXPECT_TRUE(is_squarefree(s));
    EXPECT_TRUE(divmod(p, s).second.is_zero());
    auto g = gcd(a * b, a);
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(a * b, g).second.is_zero());
  }
  for (int k = 0; k < 10; ++k) {
    auto a = random_poly(rng, 2) + BivariatePolynomial::y();
    auto b = random_poly(rng, 2) + BivariatePolynomial::monomial(Rational(1), 0, 2);
    auto p = a * a * b;
    auto s = squarefree_part(p);
    EXPECT_TRUE(is_squarefree(s)) << p.to_string();
    EXPECT_FALSE(exact_quotient(p, s).is_zero());
  }
}

TEST(Roots, Examples) {
  auto two = isolate_roots(UnivariatePolynomial({Rational(-1), Rational(0), Rational(1)}), Rational(-2), Rational(2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(two[0].lo < -1 && -1 < two[0].hi);
  EXPECT_TRUE(two[1].lo < 1 && 1 < two[1].hi);
  auto one = isolate_roots(UnivariatePolynomial({Rational(0), Rational(-1), Rational(0), Rational(1)}), Rational(0),
                           Rational(2));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].contains(Rational(1)));

  // (y^2 - 9/100)^2 - 19/10000 = f(9/100, y) - 1/100 for f = x^2 + (y^2 - x)^2
  auto quartic = P("x^2+(y^2-x)^2").at_x(Q("9/100")) - UnivariatePolynomial::constant(Q("1/100"));
  auto roots = isolate_roots(quartic);
  ASSERT_EQ(roots.size(), 4u);
  const double expect[] = {-0.3655, -0.2154, 0.2154, 0.3655};
  for (int i = 0; i < 4; ++i) {
    auto r = refine(roots[i], quartic, Q("1/100000"));
    EXPECT_NEAR(to_double(r.mid()), expect[i], 1e-3);
  }
}

TEST(Roots, Refine) {
  auto p = UnivariatePolynomial({Rational(-1), Rational(0), Rational(1)});
  IsolatingInterval iv{Rational(0), Rational(2), -1, 1};
  auto r = refine(iv, p, Q("1/8"));
  EXPECT_LE(r.width(), Q("1/8"));
  EXPECT_TRUE(r.lo <= 1 && 1 <= r.hi);
  auto same = refine(iv, p, Rational(4));
  EXPECT_EQ(same.lo, iv.lo);
  EXPECT_EQ(same.hi, iv.hi);
  auto half = UnivariatePolynomial({Q("-1/2"), Rational(0), Rational(1)});
  auto s = refine({Rational(0), Rational(1), -1, 1}, half, Q("1/100"));
  EXPECT_LT(to_double(s.lo), 0.70711);
  EXPECT_GT(to_double(s.hi), 0.70710);
}

TEST(Roots, CountsAgreeWithSturmAndSampling) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 40; ++k) {
    auto p = squarefree_part(random_univariate(rng, 2 + static_cast<int>(rng() % 5)));
    const Rational lo(-3), hi(3);
    auto roots = isolate_roots(p, lo, hi);
    EXPECT_EQ(static_cast<int>(roots.size()), sturm_count(p, lo, hi) - (p(hi) == 0 ? 1 : 0));
    for (size_t i = 0; i < roots.size(); ++i) {
      EXPECT_NE(roots[i].sign_left, roots[i].sign_right);
      EXPECT_EQ(p.sign_at(roots[i].lo), roots[i].sign_left);
      if (i) EXPECT_LE(roots[i - 1].hi, roots[i].lo);
    }
    // Sampling can only miss roots, never invent them.
    EXPECT_LE(oracle::sampled_sign_changes(p, -3, 3, 20000), static_cast<int>(roots.size()));
  }
}
