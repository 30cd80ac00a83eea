#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "run.hpp"

using namespace reebsnake;

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("reebsnake");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* level = std::getenv("REEBSNAKE_LOG");
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Asymptotic Poincare-Reeb trees and snakes of a strict local minimum at the origin"};
  std::string poly, poly_file, direction = "auto", epsilon = "auto", emit = "summary", out = ".";
  int scan_points = 64;
  std::uint64_t seed = 0;
  auto* poly_opt = app.add_option("--poly", poly, "Polynomial in x, y, e.g. \"x^2+(y^2-x)^2\"");
  auto* file_opt = app.add_option("--poly-file", poly_file, "Read the polynomial from a file");
  poly_opt->excludes(file_opt);
  app.add_option("--direction", direction, "t (tan half angle), c,s or auto")->capture_default_str();
  app.add_option("--epsilon", epsilon, "p/q or auto")->capture_default_str();
  app.add_option("--scan-points", scan_points, "Grid size for --direction auto")->capture_default_str();
  app.add_option("--emit", emit, "Comma list of json, dot, svg, summary")->capture_default_str();
  app.add_option("--out", out, "Output directory")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Use the generated polynomial with this seed");
  CLI11_PARSE(app, argc, argv);

  cli::RunConfig config;
  try {
    config.polynomial_text = poly;
    if (*file_opt) {
      std::ifstream in(poly_file);
      if (!in) throw Error(ErrorCode::IOError, "cannot read " + poly_file);
      std::stringstream ss;
      ss << in.rdbuf();
      config.polynomial_text = ss.str();
    }
    if (*seed_opt) config.seed = seed;
    config.direction = cli::parse_direction(direction);
    if (epsilon != "auto") config.epsilon = parse_rational(epsilon);
    config.scan_points = scan_points;
    config.emit.clear();
    for (const auto& token : split(emit, ',')) config.emit.insert(cli::parse_emit(token));
    config.output_dir = out;
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return cli::exit_code(e.code());
  }
  return cli::run_main(config, std::cout, std::cerr);
}
