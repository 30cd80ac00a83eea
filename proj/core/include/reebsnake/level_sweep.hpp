#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "reebsnake/interval.hpp"
#include "reebsnake/polynomial.hpp"
#include "reebsnake/roots.hpp"

namespace reebsnake {

enum class Side { Left, Right };
enum class EventKind { Crest, Valley };

std::string_view to_string(Side s);
std::string_view to_string(EventKind k);

/// A point of the polar curve lying on the level curve f = epsilon.
struct TangencyEvent {
  /// Isolates the event abscissa as a root of *x_poly.
  IsolatingInterval x_box;
  /// Isolates the event ordinate as a root of df/dy(x*, .), for every x in x_box.
  IsolatingInterval y_box;
  Side side = Side::Right;
  std::optional<EventKind> kind;
  /// 1-based position along the level curve on its side, bottom to top; 0 when unranked.
  /// Coincides with the order of polar half-branches when the side is asymptotic.
  int branch_rank = 0;
  Rational epsilon;
  std::shared_ptr<const UnivariatePolynomial> x_poly;
};

/// One component of {y : f(x, y) <= eps} belonging to D_eps. The ends are
/// roots of f(x, .) - eps, given as isolating intervals.
struct FiberInterval {
  IsolatingInterval lower;
  IsolatingInterval upper;
  int id = -1;
  Rational y_lo() const { return lower.mid(); }
  Rational y_hi() const { return upper.mid(); }
};

struct FiberSlice {
  Rational x;
  std::vector<FiberInterval> intervals;  // ascending in y
};

enum class TransitionType { Split, Dies };

struct Transition {
  TransitionType type = TransitionType::Dies;
  int parent = -1;
  std::vector<int> children;  // top to bottom
};

struct SideSweep {
  Side side = Side::Right;
  /// Ordered by branch_rank; events[i].branch_rank == i + 1.
  std::vector<TangencyEvent> events;
  /// transitions[i] belongs to events[i].
  std::vector<Transition> transitions;
  /// Order in which the events are met moving away from the origin (indices into events).
  std::vector<int> sweep_order;
  /// Slice at x = 0 followed by one slice per gap between consecutive events, moving away from 0.
  std::vector<FiberSlice> slices;
  int initial_interval = 0;
  /// Polar half-branches meeting D_eps near the origin on this side.
  int half_branches = 0;
  /// Each of those half-branches carries exactly one event, met in the same
  /// order as along the curve. False when the polar curve folds inside D.
  bool asymptotic = false;
};

struct SweepResult {
  Rational epsilon;
  SideSweep left;
  SideSweep right;
  const SideSweep& side(Side s) const { return s == Side::Left ? left : right; }
};

/// All real tangency events on both sides, sorted by x, unranked and unclassified.
/// Events sharing an abscissa are all returned.
std::vector<TangencyEvent> tangency_events(const BivariatePolynomial& f, const Rational& epsilon);

/// Crest when the level curve lies locally on the far side of the vertical
/// tangent (away from the origin), Valley otherwise.
EventKind classify_event(const BivariatePolynomial& f, const TangencyEvent& e);

/// Components of D_eps over the vertical line x = x0.
FiberSlice fiber_components(const BivariatePolynomial& f, const Rational& epsilon, const Rational& x0);

SweepResult sweep(const BivariatePolynomial& f, const Rational& epsilon);

struct EpsilonOptions {
  Rational epsilon0{1, 4};
  int k_max = 40;
  /// Consecutive levels whose trees must agree.
  int stable_levels = 3;
  /// Events must lie in [-box, box]^2.
  Rational box{1, 2};
};

/// Largest eps0 * 2^-k after which the tree is unchanged for stable_levels levels.
Rational choose_epsilon(const BivariatePolynomial& f, const UnitDirection& d, const EpsilonOptions& options = {});

/// True when every event box lies inside [-box, box]^2.
bool events_inside(const SweepResult& s, const Rational& box);

}  // namespace reebsnake
