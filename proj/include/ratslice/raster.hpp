#pragma once

#include <cstddef>
#include <vector>

#include "ratslice/classifier.hpp"
#include "ratslice/complex.hpp"
#include "ratslice/family.hpp"
#include "ratslice/slices.hpp"

namespace ratslice {

/// Rectangular window of a complex plane sampled at pixel centers. The
/// imaginary axis points up; the vertical extent is width * pixels_y / pixels_x.
struct Viewport {
  Complex center{0.0, 0.0};
  double width = 4.0;
  int pixels_x = 256;
  int pixels_y = 256;

  void validate() const;
  double height() const { return width * pixels_y / pixels_x; }
  /// Grid step (plane units per pixel).
  double step() const { return width / pixels_x; }

  /// Plane point at the center of pixel (i, j); j = 0 is the top row. Offsets
  /// are formed as (odd integer) / (2 pixels_x) * width, so mirrored pixels of a
  /// centered viewport are exact negatives of each other.
  Complex point(int i, int j) const {
    const double two_px = 2.0 * pixels_x;
    const double re = static_cast<double>(2 * i + 1 - pixels_x) / two_px * width;
    const double im = static_cast<double>(pixels_y - 1 - 2 * j) / two_px * width;
    return {center.real() + re, center.imag() + im};
  }

  bool operator==(const Viewport&) const = default;
};

enum class GridKind { ParameterSlice, DynamicalPlane, CubicSlice };

/// Per-pixel classifications of one render. For dynamical-plane grids the
/// single orbit verdict is stored in both orbit slots.
struct GridResult {
  GridKind kind = GridKind::ParameterSlice;
  Viewport viewport;
  SliceSpec spec;      // ParameterSlice, CubicSlice (lambda holds mu)
  MapParams map;       // DynamicalPlane
  ClassifierConfig cfg;
  std::vector<PixelClass> cells;  // row-major, cells[j * pixels_x + i]
  double seconds = 0.0;

  const PixelClass& at(int i, int j) const {
    return cells[static_cast<std::size_t>(j) * viewport.pixels_x + i];
  }
  double undecided_fraction() const;
};

/// Worker count used when threads <= 0.
int default_thread_count();

/// Square tile edge for parallel scheduling.
inline constexpr int kTileSize = 64;

GridResult render_slice(const SliceSpec& spec, const Viewport& vp, const ClassifierConfig& cfg, int threads = 0);

/// Throws DegenerateMap for a degenerate member.
GridResult render_dynplane(const MapParams& p, const Viewport& vp, const ClassifierConfig& cfg, int threads = 0);

/// Parameter plane of P(z) = mu z + b z^2 + z^3 in the coordinate b.
GridResult render_cubic_slice(Complex mu, const Viewport& vp, const ClassifierConfig& cfg, int threads = 0);

/// Centered at 0 with width 2.5 * outer trapping radius.
Viewport default_dynplane_viewport(const MapParams& p, int pixels_x, int pixels_y);

}  // namespace ratslice
