#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "corpus.hpp"
#include "oracle.hpp"
#include "reebsnake/error.hpp"
#include "reebsnake/parser.hpp"

using namespace reebsnake;

namespace {

BivariatePolynomial P(const char* s) { return parse_polynomial(s); }
Rational Q(const char* s) { return parse_rational(s); }

int count(const std::vector<TangencyEvent>& evs, Side side) {
  return static_cast<int>(std::count_if(evs.begin(), evs.end(), [&](const auto& e) { return e.side == side; }));
}

// Event location in doubles: refined abscissa, then the polar root by bisection.
std::pair<double, double> locate(const BivariatePolynomial& f, const TangencyEvent& ev) {
  IsolatingInterval x = refine(ev.x_box, *ev.x_poly, pow2(-40));
  Rational xm = x.mid();
  UnivariatePolynomial polar = f.partial(Variable::Y).at_x(xm);
  Rational lo = ev.y_box.lo, hi = ev.y_box.hi;
  int slo = polar.sign_at(lo);
  for (int k = 0; k < 50 && slo != 0; ++k) {
    Rational m = midpoint(lo, hi);
    int sm = polar.sign_at(m);
    if (sm == 0) lo = hi = m;
    else if (sm == slo) lo = m;
    else hi = m;
  }
  return {to_double(xm), to_double(midpoint(lo, hi))};
}

struct Rotated {
  std::string name;
  BivariatePolynomial f;
  Rational eps;
  const SweepResult* sweep = nullptr;
};

std::vector<Rotated> instances(int generated) {
  std::vector<Rotated> out;
  for (const corpus::Case* c : {&corpus::coste(), &corpus::bitangent()}) {
    out.push_back({c->name, c->result.rotated, c->result.epsilon, &c->result.sweep});
  }
  for (const auto& c : corpus::generated(generated)) {
    out.push_back({c.name, c.result.rotated, c.result.epsilon, &c.result.sweep});
  }
  return out;
}

}  // namespace

TEST(TangencyEvents, Circle) {
  auto evs = tangency_events(P("x^2+y^2"), Rational(1));
  ASSERT_EQ(evs.size(), 2u);
  EXPECT_TRUE(evs[0].x_box.lo <= -1 && -1 <= evs[0].x_box.hi);
  EXPECT_TRUE(evs[1].x_box.lo <= 1 && 1 <= evs[1].x_box.hi);
  for (const auto& e : evs) EXPECT_TRUE(e.y_box.lo <= 0 && 0 <= e.y_box.hi);
}

TEST(TangencyEvents, CosteVertical) {
  auto evs = tangency_events(P(corpus::kCoste), Q("1/100"));
  std::vector<std::pair<double, double>> right;
  for (const auto& e : evs) {
    if (e.side == Side::Right) right.emplace_back(to_double(refine(e.x_box, *e.x_poly, pow2(-30)).mid()), to_double(e.y_box.mid()));
  }
  ASSERT_EQ(right.size(), 3u);
  EXPECT_NEAR(right[0].first, std::sqrt(1.0 / 200), 1e-6);
  EXPECT_NEAR(right[1].first, 0.1, 1e-6);
  EXPECT_NEAR(right[2].first, 0.1, 1e-6);
  EXPECT_LT(right[1].second * right[2].second, 0);
}

TEST(TangencyEvents, ZeroLevelIsRejected) {
  EXPECT_THROW(tangency_events(P("x^2+y^2"), Rational(0)), Error);
  EXPECT_THROW(sweep(P("x^2+y^2"), Rational(0)), Error);
}

TEST(Fiber, CosteExamples) {
  auto f = P(corpus::kCoste);
  auto two = fiber_components(f, Q("1/100"), Q("9/100"));
  ASSERT_EQ(two.intervals.size(), 2u);
  auto ends = [&](const FiberInterval& iv) {
    auto p = f.at_x(Q("9/100")) - UnivariatePolynomial::constant(Q("1/100"));
    return std::pair{to_double(refine(iv.lower, p, pow2(-30)).mid()), to_double(refine(iv.upper, p, pow2(-30)).mid())};
  };
  auto [a0, a1] = ends(two.intervals[0]);
  auto [b0, b1] = ends(two.intervals[1]);
  EXPECT_NEAR(a0, -0.3655, 1e-3);
  EXPECT_NEAR(a1, -0.2154, 1e-3);
  EXPECT_NEAR(b0, 0.2154, 1e-3);
  EXPECT_NEAR(b1, 0.3655, 1e-3);
  EXPECT_EQ(fiber_components(f, Q("1/100"), Q("1/20")).intervals.size(), 1u);
  EXPECT_TRUE(fiber_components(f, Q("1/100"), Q("1/2")).intervals.empty());
  EXPECT_TRUE(fiber_components(f, Q("1/100"), Q("-1/2")).intervals.empty());
  EXPECT_EQ(fiber_components(f, Q("1/100"), Rational(0)).intervals.size(), 1u);
}

TEST(Sweep, Circle) {
  auto s = sweep(P("x^2+y^2"), Q("1/4"));
  for (const SideSweep* side : {&s.left, &s.right}) {
    ASSERT_EQ(side->events.size(), 1u);
    EXPECT_EQ(side->events[0].kind, EventKind::Valley);
    EXPECT_EQ(side->transitions[0].type, TransitionType::Dies);
  }
}

TEST(Sweep, RotatedCoste) {
  const auto& s = corpus::coste().result.sweep;
  ASSERT_EQ(s.right.events.size(), 3u);
  EXPECT_EQ(s.right.events[0].kind, EventKind::Valley);
  EXPECT_EQ(s.right.events[1].kind, EventKind::Crest);
  EXPECT_EQ(s.right.events[2].kind, EventKind::Valley);
  ASSERT_EQ(s.left.events.size(), 1u);
  EXPECT_EQ(s.right.slices.size(), 4u);
}

TEST(Sweep, VerticalBitangentExampleFails) {
  EXPECT_THROW(sweep(P(corpus::kBitangent), Q("1/2048")), Error);
}

TEST(Sweep, ScalingInvariance) {
  for (const auto& c : corpus::generated(6)) {
    const Rational k = Q("7/3");
    auto a = c.result.sweep;
    auto b = sweep(c.result.rotated * k, c.result.epsilon * k);
    for (Side side : {Side::Left, Side::Right}) {
      const auto& ea = a.side(side).events;
      const auto& eb = b.side(side).events;
      ASSERT_EQ(ea.size(), eb.size()) << c.name;
      for (size_t i = 0; i < ea.size(); ++i) {
        EXPECT_EQ(ea[i].kind, eb[i].kind);
        EXPECT_EQ(ea[i].branch_rank, eb[i].branch_rank);
        EXPECT_TRUE(ea[i].x_box.lo < eb[i].x_box.hi && eb[i].x_box.lo < ea[i].x_box.hi) << c.name;
      }
    }
  }
}

TEST(Sweep, AlternationAndCounts) {
  for (const auto& inst : instances(20)) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto& ev = inst.sweep->side(side).events;
      ASSERT_FALSE(ev.empty()) << inst.name;
      EXPECT_EQ(ev.front().kind, EventKind::Valley) << inst.name;
      EXPECT_EQ(ev.back().kind, EventKind::Valley) << inst.name;
      int valleys = 0, crests = 0;
      for (size_t i = 0; i < ev.size(); ++i) {
        (ev[i].kind == EventKind::Valley ? valleys : crests)++;
        if (i) EXPECT_NE(ev[i].kind, ev[i - 1].kind) << inst.name;
      }
      EXPECT_EQ(valleys, crests + 1) << inst.name;
    }
  }
}

TEST(Sweep, SliceCountsStepByOne) {
  for (const auto& inst : instances(20)) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto& s = inst.sweep->side(side);
      // Slices follow the sweep order: one after each event met moving outwards.
      ASSERT_EQ(s.slices.size(), s.events.size() + 1) << inst.name;
      for (size_t k = 0; k < s.sweep_order.size(); ++k) {
        const auto& ev = s.events[s.sweep_order[k]];
        int change = static_cast<int>(s.slices[k + 1].intervals.size()) - static_cast<int>(s.slices[k].intervals.size());
        EXPECT_EQ(change, *ev.kind == EventKind::Crest ? 1 : -1) << inst.name;
        auto direct = fiber_components(inst.f, inst.eps, s.slices[k + 1].x);
        EXPECT_EQ(direct.intervals.size(), s.slices[k + 1].intervals.size()) << inst.name;
      }
    }
  }
}

TEST(Classify, AgreesWithStoredKinds) {
  const auto& c = corpus::coste();
  for (Side side : {Side::Left, Side::Right}) {
    for (const auto& ev : c.result.sweep.side(side).events) {
      EXPECT_EQ(classify_event(c.result.rotated, ev), *ev.kind);
    }
  }
}

// Dense-grid flood fill of {f <= eps} from the origin, columns compared with fiber_components.
TEST(Oracle, FiberCountsMatchFloodFill) {
  for (const auto& inst : instances(20)) {
    oracle::FloodGrid g(inst.f, to_double(inst.eps), 1536);
    auto [lo, hi] = g.x_extent();
    for (int k = 1; k <= 10; ++k) {
      const int i = g.column_of(lo + (hi - lo) * k / 11.0);
      const Rational x0(g.x_at(i));
      EXPECT_EQ(static_cast<int>(fiber_components(inst.f, inst.eps, x0).intervals.size()), g.column_components(i))
          << inst.name << " x0=" << g.x_at(i);
    }
  }
}

// Crossing a crest outwards adds a fibre component, crossing a valley removes one.
TEST(Oracle, KindsMatchFloodFillCountChange) {
  int checked = 0;
  for (const auto& inst : instances(20)) {
    oracle::FloodGrid g(inst.f, to_double(inst.eps), 1536);
    const double cell = g.x_at(1) - g.x_at(0);
    for (Side side : {Side::Left, Side::Right}) {
      std::vector<double> xs{0};
      for (const auto& ev : inst.sweep->side(side).events) xs.push_back(locate(inst.f, ev).first);
      for (const auto& ev : inst.sweep->side(side).events) {
        const double x = locate(inst.f, ev).first;
        double gap = 1e9;
        for (double o : xs) {
          if (o != x) gap = std::min(gap, std::abs(o - x));
        }
        const double delta = gap / 3;
        if (delta < 3 * cell) continue;  // not resolvable on this grid
        const double out = side == Side::Right ? 1 : -1;
        int change = g.column_components(g.column_of(x + out * delta)) - g.column_components(g.column_of(x - out * delta));
        EXPECT_EQ(change, *ev.kind == EventKind::Crest ? 1 : -1) << inst.name;
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 40);
}

// Ranks against the order in which a traced boundary of the flood fill meets the events.
TEST(Oracle, RanksFollowTracedBoundary) {
  for (const auto& inst : instances(20)) {
    oracle::FloodGrid g(inst.f, to_double(inst.eps), 1536);
    for (Side side : {Side::Left, Side::Right}) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& ev : inst.sweep->side(side).events) pts.push_back(locate(inst.f, ev));
      auto pos = oracle::boundary_positions(g, pts);
      for (size_t i = 1; i < pos.size(); ++i) {
        if (side == Side::Right) EXPECT_LT(pos[i - 1], pos[i]) << inst.name;
        else EXPECT_GT(pos[i - 1], pos[i]) << inst.name;
      }
    }
  }
}

TEST(ChooseEpsilon, Circle) { EXPECT_EQ(choose_epsilon(P("x^2+y^2"), UnitDirection::identity()), Q("1/4")); }

TEST(ChooseEpsilon, RotatedCosteHasThreeRightEvents) {
  auto d = UnitDirection::from_half_angle(Q("1/64"));
  Rational eps = choose_epsilon(P(corpus::kCoste), d);
  auto s = sweep(rotate(P(corpus::kCoste), d), eps);
  EXPECT_EQ(s.right.events.size(), 3u);
  EXPECT_TRUE(events_inside(s, Q("1/2")));
}

TEST(ChooseEpsilon, NonStrictMinimumDoesNotStabilise) {
  try {
    choose_epsilon(P("y^2"), UnitDirection::identity());
    FAIL() << "expected NoStabilization";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoStabilization);
  }
  EpsilonOptions quick;
  quick.k_max = 4;
  try {
    choose_epsilon(P(corpus::kInflection), UnitDirection::from_half_angle(Q("1/64")), quick);
    FAIL() << "expected NoStabilization";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoStabilization);
  }
}
