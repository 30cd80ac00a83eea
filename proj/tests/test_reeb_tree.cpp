#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "corpus.hpp"
#include "reebsnake/emit.hpp"
#include "reebsnake/error.hpp"
#include "reebsnake/parser.hpp"
#include "reebsnake/reeb_tree.hpp"

using namespace reebsnake;

namespace {

struct V {
  VertexSide side;
  VertexKind kind;
  long x;  // abscissa in 1/16 units
  std::vector<int> children;
};

PoincareReebTree make(const std::vector<V>& vs) {
  PoincareReebTree t;
  for (size_t i = 0; i < vs.size(); ++i) {
    ReebVertex v;
    v.id = static_cast<int>(i);
    v.side = vs[i].side;
    v.kind = vs[i].kind;
    v.x = Interval::point(ratio(vs[i].x, 16));
    v.children = vs[i].children;
    t.vertices.push_back(v);
  }
  return t;
}

constexpr auto R = VertexSide::Right;
constexpr auto L = VertexSide::Left;
constexpr auto Root = VertexSide::Root;
constexpr auto C = VertexKind::Crest;
constexpr auto Va = VertexKind::Valley;
constexpr auto Rk = VertexKind::Root;

// Right side: a crest with two leaves; left side: one leaf.
PoincareReebTree coste_like(long upper_x, long lower_x) {
  return make({{Root, Rk, 0, {1, 2}}, {L, Va, -2, {}}, {R, C, 1, {3, 4}}, {R, Va, upper_x, {}}, {R, Va, lower_x, {}}});
}

// Random plane binary tree on one side with |x| increasing along every geodesic.
PoincareReebTree random_tree(std::mt19937_64& rng) {
  std::vector<V> vs{{Root, Rk, 0, {}}};
  long next_x = 1;
  std::function<int(VertexSide, int)> grow = [&](VertexSide side, int budget) -> int {
    const int id = static_cast<int>(vs.size());
    const long sign = side == R ? 1 : -1;
    vs.push_back({side, Va, sign * next_x++, {}});
    if (budget >= 2 && rng() % 2) {
      vs[id].kind = C;
      int left_budget = static_cast<int>(rng() % (budget - 1));
      int a = grow(side, left_budget);
      int b = grow(side, budget - 2 - left_budget);
      vs[id].children = {a, b};
    }
    return id;
  };
  int l = grow(L, static_cast<int>(rng() % 3));
  int r = grow(R, static_cast<int>(rng() % 5));
  vs[0].children = {l, r};
  return make(vs);
}

}  // namespace

TEST(BuildTree, Circle) {
  auto s = sweep(parse_polynomial("x^2+y^2"), parse_rational("1/4"));
  auto t = build_tree(s, UnitDirection::identity());
  ASSERT_EQ(t.vertices.size(), 3u);
  EXPECT_EQ(t.vertex(t.root_id).children.size(), 2u);
  for (int c : t.vertex(t.root_id).children) {
    EXPECT_EQ(t.vertex(c).kind, VertexKind::Valley);
    EXPECT_TRUE(t.vertex(c).children.empty());
  }
  EXPECT_TRUE(validate_generic(t).ok());
}

TEST(BuildTree, RotatedCoste) {
  const auto& t = corpus::coste().result.tree;
  const auto& root = t.vertex(t.root_id);
  ASSERT_EQ(root.children.size(), 2u);
  const auto& left = t.vertex(root.children[0]);
  const auto& right = t.vertex(root.children[1]);
  EXPECT_EQ(left.side, VertexSide::Left);
  EXPECT_EQ(left.kind, VertexKind::Valley);
  EXPECT_EQ(right.kind, VertexKind::Crest);
  ASSERT_EQ(right.children.size(), 2u);
  for (int c : right.children) EXPECT_EQ(t.vertex(c).kind, VertexKind::Valley);
  EXPECT_TRUE(validate_generic(t).ok());
}

TEST(BuildTree, EmptySideIsRejected) {
  auto s = sweep(parse_polynomial("x^2+y^2"), parse_rational("1/4"));
  s.right.events.clear();
  s.right.transitions.clear();
  try {
    build_tree(s, UnitDirection::identity());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentTransitions);
  }
}

TEST(BuildTree, Deterministic) {
  for (const auto& c : corpus::generated(10)) {
    EXPECT_EQ(tree_to_json(build_tree(c.result.sweep, c.direction)), tree_to_json(c.result.tree)) << c.name;
  }
}

TEST(BuildTree, CountsPerSide) {
  for (const auto& c : corpus::generated(20)) {
    for (Side side : {Side::Left, Side::Right}) {
      auto ids = vertices_on(c.result.tree, vertex_side(side));
      int leaves = 0, internal = 0;
      for (int id : ids) (c.result.tree.vertex(id).children.empty() ? leaves : internal)++;
      EXPECT_EQ(leaves, internal + 1) << c.name;
      EXPECT_EQ(ids.size(), c.result.sweep.side(side).events.size()) << c.name;
    }
  }
}

TEST(Validate, HandBuiltNonGeneric) {
  // Bitangent example: a vertex of valency 4.
  auto quad = make({{Root, Rk, 0, {1, 2}}, {L, Va, -1, {}}, {R, C, 1, {3, 4, 5}}, {R, Va, 2, {}}, {R, Va, 3, {}},
                    {R, Va, 4, {}}});
  auto r = validate_generic(quad);
  EXPECT_FALSE(r.complete_binary);
  EXPECT_EQ(r.binary_counterexample, 2);
  // Inflection example: vertices of valency 2.
  auto path = make({{Root, Rk, 0, {1, 2}}, {L, Va, -1, {}}, {R, C, 1, {3}}, {R, Va, 2, {}}});
  EXPECT_FALSE(validate_generic(path).complete_binary);
  auto bad_order = coste_like(3, 3);
  EXPECT_FALSE(validate_generic(bad_order).total_order);
  auto bad_monotone = make({{Root, Rk, 0, {1, 2}}, {L, Va, -1, {}}, {R, C, 5, {3, 4}}, {R, Va, 2, {}}, {R, Va, 6, {}}});
  EXPECT_FALSE(validate_generic(bad_monotone).monotone_geodesics);
  EXPECT_EQ(bad_monotone.vertex(3).x.lo, parse_rational("1/8"));
  EXPECT_TRUE(validate_generic(coste_like(2, 3)).ok());
}

TEST(Isomorphic, InequivalentPair) {
  EXPECT_FALSE(tree_isomorphic(coste_like(2, 3), coste_like(3, 2)));
  EXPECT_TRUE(tree_isomorphic(coste_like(2, 3), coste_like(4, 9)));
}

TEST(Isomorphic, MirrorIsDifferent) {
  auto t = coste_like(2, 3);
  auto m = t;
  for (auto& v : m.vertices) {
    if (v.side == R) v.side = L;
    else if (v.side == L) v.side = R;
    v.x = {-v.x.hi, -v.x.lo};
  }
  std::swap(m.vertices[0].children[0], m.vertices[0].children[1]);
  EXPECT_FALSE(tree_isomorphic(t, m));
}

TEST(Isomorphic, EquivalenceRelation) {
  std::mt19937_64 rng(37);
  std::vector<PoincareReebTree> ts;
  for (int k = 0; k < 50; ++k) ts.push_back(random_tree(rng));
  int related = 0;
  for (size_t a = 0; a < ts.size(); ++a) {
    EXPECT_TRUE(tree_isomorphic(ts[a], ts[a]));
    EXPECT_TRUE(validate_generic(ts[a]).ok());
    for (size_t b = 0; b < ts.size(); ++b) {
      const bool ab = tree_isomorphic(ts[a], ts[b]);
      EXPECT_EQ(ab, tree_isomorphic(ts[b], ts[a]));
      if (!ab || a == b) continue;
      ++related;
      for (size_t c = 0; c < ts.size(); ++c) {
        if (tree_isomorphic(ts[b], ts[c])) EXPECT_TRUE(tree_isomorphic(ts[a], ts[c]));
      }
    }
  }
  EXPECT_GT(related, 0);
}
