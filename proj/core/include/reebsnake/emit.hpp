#pragma once

#include <filesystem>
#include <string>

#include "reebsnake/genericity.hpp"
#include "reebsnake/reeb_tree.hpp"
#include "reebsnake/snake.hpp"

namespace reebsnake {

/// {root_id, direction: {c, s}, epsilon, vertices: [{id, side, kind, x, x_box, children}]}.
/// Rationals are "p/q" strings; x is the midpoint of x_box.
std::string tree_to_json(const PoincareReebTree& t);

/// Inverse of tree_to_json. Throws ParseError.
PoincareReebTree tree_from_json(const std::string& text);

std::string tree_to_dot(const PoincareReebTree& t);

std::string scan_to_json(const DirectionScanReport& r);

/// {side, sigma: [...], kinds: ["V", "C", ...]} with kinds in curve order.
std::string snake_to_json(const PoincareReebTree& t, Side side, const SnakePermutation& p);

/// "1 5 3 4 2"
std::string snake_line(const SnakePermutation& p);

struct SvgOptions {
  int resolution = 512;
  int pixels = 640;
};

/// Level curve f = eps traced by marching squares, the polar curve dashed,
/// events marked by kind and the tree drawn over them. f is in the swept frame.
std::string curve_svg(const BivariatePolynomial& f, const Rational& eps, const PoincareReebTree& t,
                      const SweepResult& s, const SvgOptions& options = {});

/// Throws IOError.
void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace reebsnake
