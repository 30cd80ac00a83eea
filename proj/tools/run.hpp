#pragma once

#include <filesystem>
#include <optional>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

#include "reebsnake/error.hpp"
#include "reebsnake/polynomial.hpp"

namespace reebsnake::cli {

enum class Emit { Json, Dot, Svg, Summary };

struct RunConfig {
  std::string polynomial_text;
  std::optional<UnitDirection> direction;  // empty means scan for one
  std::optional<Rational> epsilon;         // empty means choose automatically
  int scan_points = 64;
  std::set<Emit> emit{Emit::Summary};
  std::filesystem::path output_dir = ".";
  std::optional<std::uint64_t> seed;
};

/// Exit status for a library error. 0 is success, 1 an unexpected failure
/// and 2 a command-line usage error; library errors start at 10.
int exit_code(ErrorCode code);

/// "t", "c,s" or "auto".
std::optional<UnitDirection> parse_direction(const std::string& text);

Emit parse_emit(const std::string& token);

/// Runs the whole pipeline and writes the requested artifacts. Summary text
/// goes to `summary`. Throws Error on every failure.
void run(const RunConfig& config, std::string& summary);

/// run() with errors turned into a one-line diagnostic and an exit status.
int run_main(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace reebsnake::cli
