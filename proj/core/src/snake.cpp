#include "reebsnake/snake.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "reebsnake/error.hpp"

namespace reebsnake {

std::string_view to_string(SnakeShape s) {
  switch (s) {
    case SnakeShape::Singleton: return "Singleton";
    case SnakeShape::UpDown: return "UpDown";
    case SnakeShape::DownUp: return "DownUp";
    case SnakeShape::NotAlternating: return "NotAlternating";
  }
  return "?";
}

std::vector<int> curve_order(const PoincareReebTree& t, Side side) {
  const VertexSide vs = vertex_side(side);
  std::optional<int> top;
  for (int c : t.vertex(t.root_id).children) {
    if (t.vertex(c).side == vs) top = c;
  }
  if (!top) throw Error(ErrorCode::EmptySide, "no events on the " + std::string(to_string(side)) + " side");
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    const auto& ch = t.vertex(v).children;
    if (ch.empty()) {
      out.push_back(v);
      return;
    }
    walk(ch.back());
    out.push_back(v);
    for (auto it = ch.rbegin() + 1; it != ch.rend(); ++it) walk(*it);
  };
  walk(*top);
  return out;
}

std::vector<int> x_order(const std::vector<OrderedEvent>& events, Side side) {
  std::vector<OrderedEvent> sorted = events;
  std::sort(sorted.begin(), sorted.end(), [&](const OrderedEvent& a, const OrderedEvent& b) {
    return side == Side::Right ? a.x.lo > b.x.lo : a.x.lo < b.x.lo;
  });
  std::vector<int> out;
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) {
      const Interval& a = sorted[i - 1].x;
      const Interval& b = sorted[i].x;
      if (!(a.hi < b.lo || b.hi < a.lo))
        throw Error(ErrorCode::TieDetected, "events " + std::to_string(sorted[i - 1].id) + " and " +
                                                std::to_string(sorted[i].id) + " have overlapping abscissae");
    }
    out.push_back(sorted[i].id);
  }
  return out;
}

BiorderedSet biorder(const PoincareReebTree& t, Side side) {
  BiorderedSet b;
  b.elements = vertices_on(t, vertex_side(side));
  b.order_curve = curve_order(t, side);
  std::vector<OrderedEvent> evs;
  for (int id : b.elements) evs.push_back({id, t.vertex(id).x});
  b.order_x = x_order(evs, side);
  return b;
}

SnakeShape classify_shape(const std::vector<int>& sigma) {
  if (sigma.size() <= 1) return SnakeShape::Singleton;
  const bool up = sigma[0] < sigma[1];
  for (size_t i = 1; i + 1 < sigma.size(); ++i) {
    const bool rise = sigma[i] < sigma[i + 1];
    if (rise != (i % 2 == 0 ? up : !up)) return SnakeShape::NotAlternating;
  }
  return up ? SnakeShape::UpDown : SnakeShape::DownUp;
}

SnakePermutation knuth_permutation(const BiorderedSet& b) {
  std::set<int> elems(b.elements.begin(), b.elements.end());
  std::set<int> curve(b.order_curve.begin(), b.order_curve.end());
  std::set<int> xs(b.order_x.begin(), b.order_x.end());
  if (elems.size() != b.elements.size() || curve != elems || xs != elems ||
      b.order_curve.size() != elems.size() || b.order_x.size() != elems.size())
    throw Error(ErrorCode::OrderMismatch, "the two orders do not rank the same elements");
  SnakePermutation p;
  p.n = static_cast<int>(b.elements.size());
  for (int id : b.order_curve) {
    auto pos = std::find(b.order_x.begin(), b.order_x.end(), id) - b.order_x.begin();
    p.sigma.push_back(static_cast<int>(pos) + 1);
  }
  p.shape = classify_shape(p.sigma);
  return p;
}

bool is_snake(const std::vector<int>& sigma) {
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw Error(ErrorCode::NotAPermutation, "not a permutation of 1..n");
  }
  return classify_shape(sigma) != SnakeShape::NotAlternating;
}

void require_generic(const GenericityCertificate& c) {
  switch (c.verdict) {
    case Verdict::Generic: return;
    case Verdict::NonGenericInflection:
      throw Error(ErrorCode::NonGenericInflection, "polar curve is not reduced in this direction");
    case Verdict::NonGenericBitangent:
      throw Error(ErrorCode::NonGenericBitangent, "two polar points share a critical value in this direction");
    case Verdict::NonGenericBoth:
      throw Error(ErrorCode::NonGenericBoth, "non-reduced polar curve and a shared critical value");
  }
}

PipelineResult run_pipeline(const BivariatePolynomial& f, const UnitDirection& d, const PipelineOptions& options) {
  if (f(Rational(0), Rational(0)) != 0) throw Error(ErrorCode::NotVanishingAtOrigin, "f(0,0) must be 0");
  PipelineResult r;
  r.certificate = genericity_certificate(f, d, options.x_max, options.samples);
  require_generic(r.certificate);
  r.rotated = rotate(f, d);
  r.epsilon = options.epsilon ? *options.epsilon : choose_epsilon(f, d, options.epsilon_search);
  r.sweep = sweep(r.rotated, r.epsilon);
  r.tree = build_tree(r.sweep, d);
  r.validation = validate_generic(r.tree);
  if (!r.validation.ok()) throw Error(ErrorCode::InconsistentTransitions, "tree is not a generic Poincare-Reeb tree");
  for (Side side : {Side::Right, Side::Left}) {
    SnakePermutation p = knuth_permutation(biorder(r.tree, side));
    if (p.shape != SnakeShape::UpDown && p.shape != SnakeShape::Singleton)
      throw Error(ErrorCode::InconsistentTransitions, "snake does not start with an ascent");
    (side == Side::Right ? r.right : r.left) = p;
  }
  return r;
}

SnakePermutation snake_of(const BivariatePolynomial& f, const UnitDirection& d, Side side,
                          const PipelineOptions& options) {
  return run_pipeline(f, d, options).snake(side);
}

}  // namespace reebsnake
