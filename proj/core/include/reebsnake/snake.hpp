#pragma once

#include <optional>
#include <vector>

#include "reebsnake/genericity.hpp"
#include "reebsnake/level_sweep.hpp"
#include "reebsnake/reeb_tree.hpp"

namespace reebsnake {

/// Events of one side with the curve order and the x order, both as lists of ids.
struct BiorderedSet {
  std::vector<int> elements;
  std::vector<int> order_curve;
  std::vector<int> order_x;
};

enum class SnakeShape { Singleton, UpDown, DownUp, NotAlternating };

std::string_view to_string(SnakeShape s);

struct SnakePermutation {
  std::vector<int> sigma;  // 1-based values
  int n = 0;
  SnakeShape shape = SnakeShape::Singleton;
};

/// Contour walk of the side tree: lower subtree, the crest itself, upper subtree.
/// Throws EmptySide.
std::vector<int> curve_order(const PoincareReebTree& t, Side side);

struct OrderedEvent {
  int id = 0;
  Interval x;
};

/// Right side: x descending. Left side: x ascending. Throws TieDetected on overlapping boxes.
std::vector<int> x_order(const std::vector<OrderedEvent>& events, Side side);

BiorderedSet biorder(const PoincareReebTree& t, Side side);

/// sigma(i) = position in order_x of the i-th element of order_curve. Throws OrderMismatch.
SnakePermutation knuth_permutation(const BiorderedSet& b);

SnakeShape classify_shape(const std::vector<int>& sigma);

/// Throws NotAPermutation.
bool is_snake(const std::vector<int>& sigma);

struct PipelineOptions {
  std::optional<Rational> epsilon;  // chosen automatically when empty
  EpsilonOptions epsilon_search;
  Rational x_max = kDefaultXMax;
  int samples = kDefaultSamples;
};

struct PipelineResult {
  GenericityCertificate certificate;
  BivariatePolynomial rotated;
  Rational epsilon;
  SweepResult sweep;
  PoincareReebTree tree;
  ValidationReport validation;
  SnakePermutation right;
  SnakePermutation left;

  const SnakePermutation& snake(Side s) const { return s == Side::Left ? left : right; }
};

/// Certify, pick epsilon, sweep, build and validate the tree, read off both snakes.
PipelineResult run_pipeline(const BivariatePolynomial& f, const UnitDirection& d, const PipelineOptions& options = {});

SnakePermutation snake_of(const BivariatePolynomial& f, const UnitDirection& d, Side side,
                          const PipelineOptions& options = {});

/// Throws the error matching a non-generic verdict; no-op for Generic.
void require_generic(const GenericityCertificate& c);

}  // namespace reebsnake
