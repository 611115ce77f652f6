#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ratslice/classifier.hpp"
#include "ratslice/family.hpp"
#include "ratslice/raster.hpp"
#include "ratslice/slices.hpp"

namespace ratslice {

enum class Command { Slice, Dynplane, Cubic };

std::string_view to_string(Command c);

/// Everything needed to reproduce one render, stored as plain-text key=value
/// lines. Keys:
///   command kind d theta lambda mu sheet radii view alpha beta gamma coord
///   center width px py max_iter escape_magnitude eps_cycle eps_attract
///   max_period palette out csv threads
/// Complex values are written "re,im"; theta as "p/q" or a decimal literal.
struct RunConfig {
  Command command = Command::Slice;
  SliceSpec spec;
  Complex mu{0.0, 0.0};

  // Dynamical plane: either an explicit member or a slice coordinate.
  std::optional<Complex> alpha;
  std::optional<Complex> beta;
  std::optional<Complex> gamma;
  std::optional<Complex> coord;

  std::optional<Complex> center;
  std::optional<double> width;
  int px = 512;
  int py = 512;

  ClassifierConfig classifier;
  std::string palette = "classic";
  std::string out;
  std::string csv;
  int threads = 0;

  bool operator==(const RunConfig&) const = default;

  /// Applies one key=value pair. Throws InvalidArgument for unknown keys or
  /// unparsable values.
  void set(std::string_view key, std::string_view value);
};

/// Parses key=value text; blank lines and lines starting with '#' are ignored.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Canonical text form; parse_run_config(render_run_config(c)) == c.
std::string render_run_config(const RunConfig& c);
void save_run_config(const RunConfig& c, const std::filesystem::path& path);

/// The member of the family a dynamical-plane config refers to.
MapParams dynplane_map(const RunConfig& c);

/// Viewport with defaults filled in: torus [0,1)^2 for Blaschke, width 2.5 *
/// outer trapping radius for dynamical planes, otherwise width 4 about 0.
Viewport effective_viewport(const RunConfig& c);

/// Config with all defaults made explicit (center, width, theta-reduced lambda
/// untouched); this is what provenance sidecars record.
RunConfig effective_config(const RunConfig& c);

}  // namespace ratslice
