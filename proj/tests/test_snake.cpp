#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "reebsnake/error.hpp"
#include "reebsnake/parser.hpp"

using namespace reebsnake;

namespace {

PoincareReebTree five_point_tree() {
  // Curve order (bottom to top) a1..a5 = ids 1..5; x descending a1, a5, a3, a4, a2.
  auto v = [](int id, VertexSide side, VertexKind kind, const char* x, std::vector<int> ch) {
    ReebVertex r;
    r.id = id;
    r.side = side;
    r.kind = kind;
    r.x = Interval::point(parse_rational(x));
    r.children = std::move(ch);
    return r;
  };
  PoincareReebTree t;
  t.vertices = {v(0, VertexSide::Root, VertexKind::Root, "0", {6, 2}),
                v(1, VertexSide::Right, VertexKind::Valley, "5", {}),
                v(2, VertexSide::Right, VertexKind::Crest, "1", {4, 1}),
                v(3, VertexSide::Right, VertexKind::Valley, "3", {}),
                v(4, VertexSide::Right, VertexKind::Crest, "2", {5, 3}),
                v(5, VertexSide::Right, VertexKind::Valley, "4", {}),
                v(6, VertexSide::Left, VertexKind::Valley, "-1", {})};
  return t;
}

}  // namespace

TEST(Knuth, WorkedThreeElementExample) {
  BiorderedSet b;
  b.elements = {1, 2, 3};
  b.order_curve = {1, 2, 3};
  b.order_x = {1, 3, 2};
  auto p = knuth_permutation(b);
  EXPECT_EQ(p.sigma, (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(p.shape, SnakeShape::UpDown);
}

TEST(Knuth, IdentityWhenOrdersAgree) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& perm : oracle::all_permutations(n)) {
      BiorderedSet b;
      b.elements = perm;
      b.order_curve = perm;
      b.order_x = perm;
      auto p = knuth_permutation(b);
      for (int i = 0; i < n; ++i) ASSERT_EQ(p.sigma[i], i + 1);
    }
  }
}

TEST(Knuth, MismatchedOrders) {
  BiorderedSet b;
  b.elements = {1, 2};
  b.order_curve = {1, 2};
  b.order_x = {1, 3};
  EXPECT_THROW(knuth_permutation(b), Error);
}

TEST(Snake, FivePointFigure) {
  auto t = five_point_tree();
  EXPECT_TRUE(validate_generic(t).ok());
  auto order = curve_order(t, Side::Right);
  EXPECT_EQ(order, (std::vector<int>{1, 2, 3, 4, 5}));
  std::vector<VertexKind> kinds;
  for (int id : order) kinds.push_back(t.vertex(id).kind);
  EXPECT_EQ(kinds, (std::vector<VertexKind>{VertexKind::Valley, VertexKind::Crest, VertexKind::Valley,
                                            VertexKind::Crest, VertexKind::Valley}));
  auto p = knuth_permutation(biorder(t, Side::Right));
  EXPECT_EQ(p.sigma, (std::vector<int>{1, 5, 3, 4, 2}));
  EXPECT_TRUE(is_snake(p.sigma));
  EXPECT_EQ(curve_order(t, Side::Left), (std::vector<int>{6}));
}

TEST(Snake, IsSnakeExamples) {
  EXPECT_TRUE(is_snake({1, 5, 3, 4, 2}));
  EXPECT_FALSE(is_snake({1, 2, 3}));
  EXPECT_TRUE(is_snake({1}));
  EXPECT_THROW(is_snake({1, 1, 2}), Error);
  EXPECT_THROW(is_snake({0, 1}), Error);
}

// Exhaustive comparison with a literal reading of the definition, and the
// up-down counts 1, 2, 5, 16, 61, 272 for n = 2..7 (the zigzag numbers).
TEST(Snake, ExhaustiveAgainstDefinition) {
  const int up_down[] = {1, 1, 1, 2, 5, 16, 61, 272};
  for (int n = 1; n <= 7; ++n) {
    int ups = 0;
    for (const auto& s : oracle::all_permutations(n)) {
      ASSERT_EQ(is_snake(s), oracle::alternates(s));
      if (classify_shape(s) == SnakeShape::UpDown || (n == 1 && classify_shape(s) == SnakeShape::Singleton)) ++ups;
    }
    EXPECT_EQ(ups, up_down[n]) << n;
  }
}

TEST(XOrder, Examples) {
  std::vector<OrderedEvent> evs{{7, Interval{parse_rational("7/100"), parse_rational("71/1000")}},
                                {8, Interval{parse_rational("99/1000"), parse_rational("101/1000")}}};
  EXPECT_EQ(x_order(evs, Side::Right), (std::vector<int>{8, 7}));
  EXPECT_EQ(x_order({evs[0]}, Side::Right), (std::vector<int>{7}));
  std::vector<OrderedEvent> tie{{1, Interval::point(Rational(1))}, {2, Interval::point(Rational(1))}};
  EXPECT_THROW(x_order(tie, Side::Right), Error);
}

TEST(SnakeOf, Circle) {
  auto p = snake_of(parse_polynomial("x^2+y^2"), UnitDirection::identity(), Side::Right);
  EXPECT_EQ(p.sigma, std::vector<int>{1});
}

TEST(SnakeOf, RotatedCoste) {
  const auto& c = corpus::coste();
  EXPECT_EQ(c.result.right.sigma, (std::vector<int>{2, 3, 1}));
  PipelineOptions o;
  o.epsilon = parse_rational("1/32");
  auto other = snake_of(parse_polynomial(corpus::kCoste), UnitDirection::from_half_angle(parse_rational("-1/64")),
                        Side::Right, o);
  EXPECT_EQ(other.sigma, (std::vector<int>{1, 3, 2}));
  try {
    snake_of(parse_polynomial(corpus::kCoste), UnitDirection::identity(), Side::Right);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonGenericBitangent);
  }
}

TEST(SnakeOf, DegreeTenExample) {
  const auto& c = corpus::bitangent();
  EXPECT_EQ(c.result.right.sigma, (std::vector<int>{4, 5, 1, 3, 2}));
  EXPECT_EQ(c.result.left.sigma, std::vector<int>{1});
}

TEST(SnakeOf, CorpusProperties) {
  for (const auto& c : corpus::generated(20)) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto& p = c.result.snake(side);
      const auto& t = c.result.tree;
      ASSERT_TRUE(is_snake(p.sigma)) << c.name;
      EXPECT_TRUE(oracle::alternates(p.sigma)) << c.name;
      const int n = static_cast<int>(p.sigma.size());
      if (n >= 2) EXPECT_LT(p.sigma[0], p.sigma[1]) << c.name;
      if (n >= 3) EXPECT_GT(p.sigma[n - 2], p.sigma[n - 1]) << c.name;
      auto order = curve_order(t, side);
      EXPECT_EQ(static_cast<int>(order.size()), n);
      EXPECT_EQ(vertices_on(t, vertex_side(side)).size(), order.size());
      for (int i = 0; i < n; ++i) {
        EXPECT_EQ(t.vertex(order[i]).kind, i % 2 == 0 ? VertexKind::Valley : VertexKind::Crest) << c.name;
      }
    }
  }
}
