#pragma once

#include <optional>
#include <vector>

#include "reebsnake/interval.hpp"
#include "reebsnake/level_sweep.hpp"

namespace reebsnake {

enum class VertexSide { Root, Left, Right };
enum class VertexKind { Root, Crest, Valley };

std::string_view to_string(VertexSide s);
std::string_view to_string(VertexKind k);

struct ReebVertex {
  int id = 0;
  VertexSide side = VertexSide::Root;
  VertexKind kind = VertexKind::Root;
  /// Event abscissa; the point 0 for the root.
  Interval x;
  /// Root: one child per side, left first. Crest: upper child first.
  std::vector<int> children;
  int branch_rank = 0;
};

struct PoincareReebTree {
  std::vector<ReebVertex> vertices;  // vertices[i].id == i
  int root_id = 0;
  Rational epsilon;
  UnitDirection direction = UnitDirection::identity();

  const ReebVertex& vertex(int id) const { return vertices.at(id); }
};

/// Root gets id 0, then right events by branch rank, then left events by branch rank.
PoincareReebTree build_tree(const SweepResult& s, const UnitDirection& d);

struct ValidationReport {
  bool complete_binary = true;
  bool total_order = true;
  bool monotone_geodesics = true;
  std::optional<int> binary_counterexample;
  std::optional<int> order_counterexample;
  std::optional<int> monotone_counterexample;

  bool ok() const { return complete_binary && total_order && monotone_geodesics; }
};

ValidationReport validate_generic(const PoincareReebTree& t);

/// Same plane shape, sides, kinds and per-side order of |x|.
bool tree_isomorphic(const PoincareReebTree& a, const PoincareReebTree& b);

std::vector<int> vertices_on(const PoincareReebTree& t, VertexSide side);
VertexSide vertex_side(Side s);

}  // namespace reebsnake
