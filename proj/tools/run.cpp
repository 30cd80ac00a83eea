#include "run.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "reebsnake/emit.hpp"
#include "reebsnake/generator.hpp"
#include "reebsnake/genericity.hpp"
#include "reebsnake/parser.hpp"
#include "reebsnake/snake.hpp"

namespace reebsnake::cli {

namespace {

// Stable table; append new codes at the end.
constexpr ErrorCode kCodes[] = {
    ErrorCode::ParseError,         ErrorCode::NotVanishingAtOrigin, ErrorCode::InvalidDirection,
    ErrorCode::InvalidArgument,    ErrorCode::ZeroPolynomial,       ErrorCode::BothConstantInY,
    ErrorCode::ConstantInY,        ErrorCode::DegreeTooSmall,       ErrorCode::NonReducedPolar,
    ErrorCode::EventAtZero,        ErrorCode::DegenerateTangency,   ErrorCode::XAtEvent,
    ErrorCode::NonGenericTie,      ErrorCode::VerticalAsymptote,    ErrorCode::UnboundedComponent,
    ErrorCode::NotAsymptotic,      ErrorCode::BranchOrderMismatch,  ErrorCode::AlternationViolation,
    ErrorCode::EndpointNotValley,  ErrorCode::NoStabilization,      ErrorCode::InconsistentTransitions,
    ErrorCode::EmptySide,          ErrorCode::TieDetected,          ErrorCode::OrderMismatch,
    ErrorCode::NotAPermutation,    ErrorCode::NonGenericInflection, ErrorCode::NonGenericBitangent,
    ErrorCode::NonGenericBoth,     ErrorCode::IOError,
};

struct Candidate {
  Rational t;
  std::optional<Rational> distance;
};

// Farther from flagged intervals first; then smaller |t|, then smaller t.
bool better(const Candidate& a, const Candidate& b) {
  if (a.distance.has_value() != b.distance.has_value()) return !a.distance.has_value();
  if (a.distance && *a.distance != *b.distance) return *a.distance > *b.distance;
  if (abs(a.t) != abs(b.t)) return abs(a.t) < abs(b.t);
  return a.t < b.t;
}

BivariatePolynomial load_polynomial(const RunConfig& config) {
  if (!config.polynomial_text.empty()) return parse_polynomial(config.polynomial_text);
  if (config.seed) return generate_polynomial(*config.seed).f;
  throw Error(ErrorCode::InvalidArgument, "no polynomial given");
}

bool is_path(const PoincareReebTree& t) {
  for (const auto& v : t.vertices) {
    if (v.kind != VertexKind::Root && !v.children.empty()) return false;
  }
  return true;
}

std::string describe(const UnitDirection& d) { return "(" + to_string(d.c()) + ", " + to_string(d.s()) + ")"; }

}  // namespace

int exit_code(ErrorCode code) {
  auto it = std::find(std::begin(kCodes), std::end(kCodes), code);
  return 10 + static_cast<int>(it - std::begin(kCodes));
}

std::optional<UnitDirection> parse_direction(const std::string& text) {
  if (text == "auto") return std::nullopt;
  auto comma = text.find(',');
  if (comma == std::string::npos) return UnitDirection::from_half_angle(parse_rational(text));
  return UnitDirection(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

Emit parse_emit(const std::string& token) {
  if (token == "json") return Emit::Json;
  if (token == "dot") return Emit::Dot;
  if (token == "svg") return Emit::Svg;
  if (token == "summary") return Emit::Summary;
  throw Error(ErrorCode::InvalidArgument, "unknown --emit value '" + token + "'");
}

void run(const RunConfig& config, std::string& summary) {
  if (config.epsilon && *config.epsilon <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (!config.direction && config.scan_points < 8)
    throw Error(ErrorCode::InvalidArgument, "--scan-points must be at least 8 with --direction auto");

  const BivariatePolynomial f = load_polynomial(config);
  spdlog::info("f = {}", f.to_string());
  if (f(Rational(0), Rational(0)) != 0) throw Error(ErrorCode::NotVanishingAtOrigin, "f(0,0) must be 0");

  PipelineOptions options;
  options.epsilon = config.epsilon;
  std::optional<DirectionScanReport> scan;
  std::vector<UnitDirection> directions;
  if (config.direction) {
    directions.push_back(*config.direction);
  } else {
    scan = direction_scan(f, half_angle_grid(config.scan_points));
    std::vector<Candidate> candidates;
    for (const auto& s : scan->samples) {
      if (s.verdict == Verdict::Generic) candidates.push_back({s.t, distance_to_non_generic(*scan, s.t)});
    }
    if (candidates.empty()) throw Error(ErrorCode::InvalidDirection, "no generic direction on the scan grid");
    std::sort(candidates.begin(), candidates.end(), better);
    for (const auto& c : candidates) directions.push_back(UnitDirection::from_half_angle(c.t));
    spdlog::info("scan: {} generic of {} samples, {} flagged intervals", candidates.size(), scan->samples.size(),
                 scan->non_generic_intervals.size());
  }

  std::optional<PipelineResult> result;
  for (size_t i = 0; i < directions.size() && !result; ++i) {
    spdlog::info("direction {}", describe(directions[i]));
    try {
      result = run_pipeline(f, directions[i], options);
    } catch (const Error& e) {
      // A scanned direction can still be tied at the chosen level; try the next best one.
      const bool retry = !config.direction && i + 1 < directions.size() &&
                         (e.code() == ErrorCode::NonGenericTie || e.code() == ErrorCode::DegenerateTangency);
      if (!retry) throw;
      spdlog::warn("{}; trying the next direction", e.what());
    }
  }
  const PipelineResult& r = *result;

  const auto& out = config.output_dir;
  const bool files = config.emit.count(Emit::Json) || config.emit.count(Emit::Dot) || config.emit.count(Emit::Svg);
  std::error_code ec;
  if (files) std::filesystem::create_directories(out, ec);
  if (ec) throw Error(ErrorCode::IOError, "cannot create " + out.string() + ": " + ec.message());

  std::string snakes = "right " + snake_line(r.right) + "\nleft " + snake_line(r.left) + "\n";
  if (config.emit.count(Emit::Json)) {
    write_text(out / "tree.json", tree_to_json(r.tree));
    write_text(out / "snake.json",
               snake_to_json(r.tree, Side::Right, r.right) + snake_to_json(r.tree, Side::Left, r.left));
    if (scan) write_text(out / "scan.json", scan_to_json(*scan));
  }
  if (config.emit.count(Emit::Dot)) write_text(out / "tree.dot", tree_to_dot(r.tree));
  if (config.emit.count(Emit::Svg)) write_text(out / "curve.svg", curve_svg(r.rotated, r.epsilon, r.tree, r.sweep));
  if (files) write_text(out / "snake.txt", snakes);

  if (config.emit.count(Emit::Summary)) {
    std::ostringstream os;
    os << "polynomial " << f.to_string() << "\n";
    os << "direction " << describe(r.certificate.direction) << "\n";
    os << "verdict " << to_string(r.certificate.verdict) << "\n";
    os << "epsilon " << to_string(r.epsilon) << "\n";
    os << "tree " << (is_path(r.tree) ? "path" : "binary") << " " << r.tree.vertices.size() << " vertices\n";
    os << snakes;
    summary = os.str();
  }
}

int run_main(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::string summary;
    run(config, summary);
    out << summary;
    return 0;
  } catch (const Error& e) {
    err << "error " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error Internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace reebsnake::cli
