#include "reebsnake/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reebsnake/error.hpp"

namespace reebsnake {

using nlohmann::json;

namespace {

VertexSide side_from(const std::string& s) {
  if (s == "root") return VertexSide::Root;
  if (s == "left") return VertexSide::Left;
  if (s == "right") return VertexSide::Right;
  throw Error(ErrorCode::ParseError, "unknown side '" + s + "'");
}

VertexKind kind_from(const std::string& s) {
  if (s == "root") return VertexKind::Root;
  if (s == "crest") return VertexKind::Crest;
  if (s == "valley") return VertexKind::Valley;
  throw Error(ErrorCode::ParseError, "unknown kind '" + s + "'");
}

std::string str(std::string_view v) { return std::string(v); }

}  // namespace

std::string tree_to_json(const PoincareReebTree& t) {
  json j;
  j["root_id"] = t.root_id;
  j["direction"] = {{"c", to_string(t.direction.c())}, {"s", to_string(t.direction.s())}};
  j["epsilon"] = to_string(t.epsilon);
  json verts = json::array();
  for (const auto& v : t.vertices) {
    verts.push_back({{"id", v.id},
                     {"side", str(to_string(v.side))},
                     {"kind", str(to_string(v.kind))},
                     {"x", to_string(midpoint(v.x.lo, v.x.hi))},
                     {"x_box", {to_string(v.x.lo), to_string(v.x.hi)}},
                     {"children", v.children}});
  }
  j["vertices"] = verts;
  return j.dump(2) + "\n";
}

PoincareReebTree tree_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    PoincareReebTree t;
    t.root_id = j.at("root_id").get<int>();
    t.direction = UnitDirection(parse_rational(j.at("direction").at("c").get<std::string>()),
                                parse_rational(j.at("direction").at("s").get<std::string>()));
    t.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    for (const auto& jv : j.at("vertices")) {
      ReebVertex v;
      v.id = jv.at("id").get<int>();
      v.side = side_from(jv.at("side").get<std::string>());
      v.kind = kind_from(jv.at("kind").get<std::string>());
      if (jv.contains("x_box")) {
        v.x = {parse_rational(jv["x_box"][0].get<std::string>()), parse_rational(jv["x_box"][1].get<std::string>())};
      } else {
        v.x = Interval::point(parse_rational(jv.at("x").get<std::string>()));
      }
      v.children = jv.at("children").get<std::vector<int>>();
      if (v.id != static_cast<int>(t.vertices.size())) throw Error(ErrorCode::ParseError, "vertex ids must be 0..n-1 in order");
      t.vertices.push_back(v);
    }
    for (const auto& v : t.vertices) {
      for (int c : v.children) {
        if (c < 0 || c >= static_cast<int>(t.vertices.size())) throw Error(ErrorCode::ParseError, "child id out of range");
      }
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("tree JSON: ") + e.what());
  }
}

std::string tree_to_dot(const PoincareReebTree& t) {
  std::ostringstream os;
  os << "digraph reeb {\n  rankdir=LR;\n";
  for (const auto& v : t.vertices) {
    const char* shape = v.kind == VertexKind::Root ? "doublecircle" : v.kind == VertexKind::Crest ? "triangle" : "circle";
    os << "  v" << v.id << " [label=\"" << v.id << ' ' << to_string(v.kind) << "\\n" << to_string(v.side)
       << "\" shape=" << shape << "];\n";
  }
  for (const auto& v : t.vertices) {
    for (size_t i = 0; i < v.children.size(); ++i) os << "  v" << v.id << " -> v" << v.children[i] << " [label=" << i << "];\n";
  }
  // Same-rank rows keep each side ordered by |x|.
  for (VertexSide side : {VertexSide::Left, VertexSide::Right}) {
    auto ids = vertices_on(t, side);
    if (ids.empty()) continue;
    os << "  subgraph cluster_" << to_string(side) << " { label=\"" << to_string(side) << "\";";
    for (int id : ids) os << " v" << id << ";";
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

std::string scan_to_json(const DirectionScanReport& r) {
  json j;
  j["resolution"] = to_string(r.resolution);
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"t", to_string(s.t)},
                       {"c", to_string(s.direction.c())},
                       {"s", to_string(s.direction.s())},
                       {"verdict", str(to_string(s.verdict))}});
  }
  j["samples"] = samples;
  json ivs = json::array();
  for (const auto& iv : r.non_generic_intervals) {
    json crit = json::array();
    for (Verdict v : iv.criteria) crit.push_back(str(to_string(v)));
    ivs.push_back({{"t_lo", to_string(iv.t_lo)}, {"t_hi", to_string(iv.t_hi)}, {"criteria", crit}});
  }
  j["non_generic_intervals"] = ivs;
  return j.dump(2) + "\n";
}

std::string snake_to_json(const PoincareReebTree& t, Side side, const SnakePermutation& p) {
  json kinds = json::array();
  for (int id : curve_order(t, side)) kinds.push_back(t.vertex(id).kind == VertexKind::Crest ? "C" : "V");
  json j{{"side", str(to_string(side))}, {"sigma", p.sigma}, {"kinds", kinds}};
  return j.dump() + "\n";
}

std::string snake_line(const SnakePermutation& p) {
  std::string out;
  for (size_t i = 0; i < p.sigma.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.sigma[i]);
  }
  return out;
}

namespace {

struct DoublePoly {
  std::vector<std::tuple<int, int, double>> terms;
  explicit DoublePoly(const BivariatePolynomial& f) {
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e.first, e.second, c.get_d());
  }
  double operator()(double x, double y) const {
    double s = 0;
    for (const auto& [i, j, c] : terms) s += c * std::pow(x, i) * std::pow(y, j);
    return s;
  }
};

// Sign of f on a (resolution+1)^2 node grid; doubles first, exact near zero.
std::vector<std::vector<bool>> negative_grid(const BivariatePolynomial& f, const Rational& b, int n) {
  DoublePoly fd(f);
  double scale = 0;
  for (const auto& t : fd.terms) scale += std::abs(std::get<2>(t));
  const double tol = 1e-9 * (1 + scale);
  std::vector<std::vector<bool>> neg(n + 1, std::vector<bool>(n + 1));
  for (int i = 0; i <= n; ++i) {
    Rational x = -b + 2 * b * ratio(i, n);
    double xd = x.get_d();
    for (int j = 0; j <= n; ++j) {
      Rational y = -b + 2 * b * ratio(j, n);
      double v = fd(xd, y.get_d());
      neg[i][j] = std::abs(v) > tol ? v < 0 : f(x, y) < 0;
    }
  }
  return neg;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Marching squares; crossings are placed at edge midpoints, which is plenty at display resolution.
std::string contour_path(const BivariatePolynomial& f, const Rational& b, int n, double px) {
  auto neg = negative_grid(f, b, n);
  const double cell = px / n;
  std::ostringstream d;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool c00 = neg[i][j], c10 = neg[i + 1][j], c01 = neg[i][j + 1], c11 = neg[i + 1][j + 1];
      std::vector<std::pair<double, double>> pts;
      const double x0 = i * cell, y0 = px - j * cell;
      if (c00 != c10) pts.emplace_back(x0 + cell / 2, y0);
      if (c10 != c11) pts.emplace_back(x0 + cell, y0 - cell / 2);
      if (c01 != c11) pts.emplace_back(x0 + cell / 2, y0 - cell);
      if (c00 != c01) pts.emplace_back(x0, y0 - cell / 2);
      for (size_t k = 0; k + 1 < pts.size(); k += 2) {
        d << 'M' << fmt(pts[k].first) << ' ' << fmt(pts[k].second) << 'L' << fmt(pts[k + 1].first) << ' '
          << fmt(pts[k + 1].second);
      }
    }
  }
  return d.str();
}

}  // namespace

std::string curve_svg(const BivariatePolynomial& f, const Rational& eps, const PoincareReebTree& t,
                      const SweepResult& s, const SvgOptions& options) {
  Rational extent(0);
  for (const SideSweep* side : {&s.left, &s.right}) {
    for (const auto& ev : side->events) {
      for (const Rational& v : {ev.x_box.lo, ev.x_box.hi, ev.y_box.lo, ev.y_box.hi}) extent = std::max(extent, abs(v));
    }
  }
  Rational b(1, 1024);
  while (b < extent * Rational(5, 4)) b *= 2;
  const int n = options.resolution;
  const double px = options.pixels;
  auto map_x = [&](const Rational& x) { return Rational((x + b) / (2 * b)).get_d() * px; };
  auto map_y = [&](const Rational& y) { return Rational((b - y) / (2 * b)).get_d() * px; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.pixels << "\" height=\"" << options.pixels
     << "\" viewBox=\"0 0 " << options.pixels << ' ' << options.pixels << "\">\n";
  os << "<style>.level{fill:none;stroke:#000;stroke-width:1}.polar{fill:none;stroke:#c00;stroke-width:1;"
        "stroke-dasharray:3 2}.tree{stroke:#06c;stroke-width:2}.crest{fill:#f90}.valley{fill:#090}</style>\n";
  os << "<desc>epsilon " << to_string(eps) << ", window [-" << to_string(b) << ", " << to_string(b) << "]^2</desc>\n";
  os << "<path class=\"level\" d=\"" << contour_path(f - BivariatePolynomial::constant(eps), b, n, px) << "\"/>\n";
  os << "<path class=\"polar\" d=\"" << contour_path(f.partial(Variable::Y), b, n, px) << "\"/>\n";

  std::vector<std::pair<double, double>> pos(t.vertices.size(), {map_x(Rational(0)), map_y(Rational(0))});
  int id = 1;
  for (const SideSweep* side : {&s.right, &s.left}) {
    for (const auto& ev : side->events) {
      if (id < static_cast<int>(pos.size())) pos[id] = {map_x(ev.x_box.mid()), map_y(ev.y_box.mid())};
      ++id;
    }
  }
  for (const auto& v : t.vertices) {
    for (int c : v.children) {
      os << "<line class=\"tree\" x1=\"" << fmt(pos[v.id].first) << "\" y1=\"" << fmt(pos[v.id].second) << "\" x2=\""
         << fmt(pos[c].first) << "\" y2=\"" << fmt(pos[c].second) << "\"/>\n";
    }
  }
  for (const auto& v : t.vertices) {
    if (v.kind == VertexKind::Root) {
      os << "<rect class=\"root\" x=\"" << fmt(pos[v.id].first - 3) << "\" y=\"" << fmt(pos[v.id].second - 3)
         << "\" width=\"6\" height=\"6\"/>\n";
      continue;
    }
    os << "<circle class=\"event " << to_string(v.kind) << ' ' << to_string(v.side) << "\" cx=\""
       << fmt(pos[v.id].first) << "\" cy=\"" << fmt(pos[v.id].second) << "\" r=\"4\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot open " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
}

}  // namespace reebsnake
