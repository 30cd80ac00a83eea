#include "reebsnake/reeb_tree.hpp"

#include <algorithm>
#include <map>

#include "reebsnake/error.hpp"

namespace reebsnake {

std::string_view to_string(VertexSide s) {
  switch (s) {
    case VertexSide::Root: return "root";
    case VertexSide::Left: return "left";
    case VertexSide::Right: return "right";
  }
  return "?";
}

std::string_view to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Root: return "root";
    case VertexKind::Crest: return "crest";
    case VertexKind::Valley: return "valley";
  }
  return "?";
}

VertexSide vertex_side(Side s) { return s == Side::Left ? VertexSide::Left : VertexSide::Right; }

namespace {

// Adds the vertices of one side and returns the id of the root's child.
int add_side(PoincareReebTree& t, const SideSweep& s) {
  if (s.events.empty()) throw Error(ErrorCode::InconsistentTransitions, "empty " + std::string(to_string(s.side)) + " side");
  const int base = static_cast<int>(t.vertices.size());
  std::map<int, int> terminal;
  for (size_t i = 0; i < s.events.size(); ++i) {
    if (!terminal.emplace(s.transitions[i].parent, base + static_cast<int>(i)).second)
      throw Error(ErrorCode::InconsistentTransitions, "fibre interval terminates twice");
  }
  auto end_of = [&](int interval) {
    auto it = terminal.find(interval);
    if (it == terminal.end()) throw Error(ErrorCode::InconsistentTransitions, "fibre interval never terminates");
    return it->second;
  };
  for (size_t i = 0; i < s.events.size(); ++i) {
    const auto& ev = s.events[i];
    ReebVertex v;
    v.id = base + static_cast<int>(i);
    v.side = vertex_side(s.side);
    v.kind = ev.kind == EventKind::Crest ? VertexKind::Crest : VertexKind::Valley;
    v.x = Interval::of(ev.x_box);
    v.branch_rank = ev.branch_rank;
    for (int child : s.transitions[i].children) v.children.push_back(end_of(child));
    t.vertices.push_back(v);
  }
  int top = end_of(s.initial_interval);
  // Every vertex must be reached exactly once from the side root.
  std::vector<int> seen(t.vertices.size(), 0);
  std::vector<int> stack{top};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]++) throw Error(ErrorCode::InconsistentTransitions, "fibre parentage has a cycle");
    for (int c : t.vertices[v].children) stack.push_back(c);
  }
  for (size_t v = base; v < t.vertices.size(); ++v) {
    if (!seen[v]) throw Error(ErrorCode::InconsistentTransitions, "tangency not connected to the origin");
  }
  return top;
}

bool before(const Interval& a, const Interval& b) { return a.hi < b.lo; }

// Distance from the origin is strictly larger for b than for a.
bool farther(const Interval& a, const Interval& b, VertexSide side) {
  return side == VertexSide::Left ? before(b, a) : before(a, b);
}

}  // namespace

PoincareReebTree build_tree(const SweepResult& s, const UnitDirection& d) {
  PoincareReebTree t;
  t.epsilon = s.epsilon;
  t.direction = d;
  t.root_id = 0;
  ReebVertex root;
  root.id = 0;
  root.x = Interval::point(Rational(0));
  t.vertices.push_back(root);
  int right = add_side(t, s.right);
  int left = add_side(t, s.left);
  t.vertices[0].children = {left, right};
  return t;
}

std::vector<int> vertices_on(const PoincareReebTree& t, VertexSide side) {
  std::vector<int> out;
  for (const auto& v : t.vertices) {
    if (v.side == side) out.push_back(v.id);
  }
  return out;
}

ValidationReport validate_generic(const PoincareReebTree& t) {
  ValidationReport r;
  for (const auto& v : t.vertices) {
    bool good;
    if (v.id == t.root_id) {
      good = v.children.size() <= 2 && v.kind == VertexKind::Root;
      for (int c : v.children) good = good && t.vertex(c).side != VertexSide::Root;
      if (v.children.size() == 2) good = good && t.vertex(v.children[0]).side != t.vertex(v.children[1]).side;
    } else if (v.kind == VertexKind::Crest) {
      good = v.children.size() == 2;
    } else {
      good = v.children.empty() && v.kind == VertexKind::Valley;
    }
    if (!good && r.complete_binary) {
      r.complete_binary = false;
      r.binary_counterexample = v.id;
    }
  }
  for (VertexSide side : {VertexSide::Left, VertexSide::Right}) {
    auto ids = vertices_on(t, side);
    for (size_t i = 0; i < ids.size() && r.total_order; ++i) {
      const Interval& xi = t.vertex(ids[i]).x;
      bool good = side == VertexSide::Right ? xi.lo > 0 : xi.hi < 0;
      for (size_t j = 0; j < i && good; ++j) {
        const Interval& xj = t.vertex(ids[j]).x;
        good = before(xi, xj) || before(xj, xi);
      }
      if (!good) {
        r.total_order = false;
        r.order_counterexample = ids[i];
      }
    }
  }
  for (const auto& v : t.vertices) {
    for (int c : v.children) {
      const ReebVertex& child = t.vertex(c);
      bool good = v.id == t.root_id
                      ? farther(v.x, child.x, child.side)
                      : child.side == v.side && farther(v.x, child.x, v.side);
      if (!good && r.monotone_geodesics) {
        r.monotone_geodesics = false;
        r.monotone_counterexample = c;
      }
    }
  }
  return r;
}

namespace {

std::map<int, int> x_ranks(const PoincareReebTree& t) {
  std::map<int, int> rank;
  for (VertexSide side : {VertexSide::Left, VertexSide::Right}) {
    auto ids = vertices_on(t, side);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return side == VertexSide::Right ? t.vertex(a).x.lo < t.vertex(b).x.lo : t.vertex(a).x.hi > t.vertex(b).x.hi;
    });
    for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
  }
  return rank;
}

bool same_shape(const PoincareReebTree& a, int va, const std::map<int, int>& ra, const PoincareReebTree& b, int vb,
                const std::map<int, int>& rb) {
  const ReebVertex& x = a.vertex(va);
  const ReebVertex& y = b.vertex(vb);
  if (x.side != y.side || x.kind != y.kind || x.children.size() != y.children.size()) return false;
  if (x.side != VertexSide::Root && ra.at(va) != rb.at(vb)) return false;
  for (size_t i = 0; i < x.children.size(); ++i) {
    if (!same_shape(a, x.children[i], ra, b, y.children[i], rb)) return false;
  }
  return true;
}

}  // namespace

bool tree_isomorphic(const PoincareReebTree& a, const PoincareReebTree& b) {
  if (a.vertices.size() != b.vertices.size()) return false;
  return same_shape(a, a.root_id, x_ranks(a), b, b.root_id, x_ranks(b));
}

}  // namespace reebsnake
