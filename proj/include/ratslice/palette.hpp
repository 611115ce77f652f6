#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratslice/classifier.hpp"
#include "ratslice/raster.hpp"

namespace ratslice {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// Total mapping from classification labels to colors.
///
/// Parameter pixels are colored by a representative orbit: any Singular label
/// wins, then an escaping orbit (the quicker one if both escape), then a
/// non-marked cycle, then a marked cycle, and finally undecided. Escape to
/// infinity is banded by iteration count; cycles other than the marked one are
/// keyed by period mod 8.
class Palette {
 public:
  /// Presets: "classic", "mono", "basins".
  static std::optional<Palette> preset(std::string_view name);
  static std::vector<std::string> preset_names();

  const std::string& name() const { return name_; }
  Rgb color(const OrbitVerdict& v) const;
  Rgb color(const PixelClass& px, GridKind kind) const;

  /// Overrides the color of one label (no banding for EscapeInf afterwards).
  void set(OrbitLabel label, Rgb c);

 private:
  std::string name_;
  Rgb escape_zero_;
  Rgb escape_inf_lo_;
  Rgb escape_inf_hi_;
  int band_period_ = 16;
  Rgb marked_;
  std::array<Rgb, 8> period_colors_{};
  Rgb undecided_;
  Rgb singular_;
};

/// Row-major RGB bytes of the grid, 3 bytes per pixel.
std::vector<std::uint8_t> rasterize(const GridResult& g, const Palette& pal);

}  // namespace ratslice
