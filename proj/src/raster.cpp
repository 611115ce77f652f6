#include "ratslice/raster.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

// Runs fn(i, j) for every pixel. Tiles are claimed from a shared counter and
// every pixel writes only its own cell, so results do not depend on scheduling.
void for_each_pixel(const Viewport& vp, int threads, const std::function<void(int, int)>& fn) {
  const int tiles_x = (vp.pixels_x + kTileSize - 1) / kTileSize;
  const int tiles_y = (vp.pixels_y + kTileSize - 1) / kTileSize;
  const int tile_count = tiles_x * tiles_y;
  std::atomic<int> next{0};

  auto worker = [&] {
    for (int t = next++; t < tile_count; t = next++) {
      const int i0 = (t % tiles_x) * kTileSize;
      const int j0 = (t / tiles_x) * kTileSize;
      const int i1 = std::min(i0 + kTileSize, vp.pixels_x);
      const int j1 = std::min(j0 + kTileSize, vp.pixels_y);
      for (int j = j0; j < j1; ++j)
        for (int i = i0; i < i1; ++i) fn(i, j);
    }
  };

  const int n = std::clamp(threads > 0 ? threads : default_thread_count(), 1, std::max(1, tile_count));
  if (n == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
}

GridResult prepare(GridKind kind, const Viewport& vp, const ClassifierConfig& cfg) {
  vp.validate();
  cfg.validate();
  GridResult g;
  g.kind = kind;
  g.viewport = vp;
  g.cfg = cfg;
  g.cells.resize(static_cast<std::size_t>(vp.pixels_x) * vp.pixels_y);
  return g;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void Viewport::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw Error(ErrorKind::InvalidArgument, "viewport width must be > 0");
  if (pixels_x < 1 || pixels_y < 1) throw Error(ErrorKind::InvalidArgument, "viewport needs at least one pixel");
  if (is_infinite(center)) throw Error(ErrorKind::InvalidArgument, "viewport center must be finite");
}

double GridResult::undecided_fraction() const {
  if (cells.empty()) return 0.0;
  const auto n = std::count_if(cells.begin(), cells.end(), [](const PixelClass& c) {
    return c.orbit1.label == OrbitLabel::BoundedUndecided || c.orbit2.label == OrbitLabel::BoundedUndecided;
  });
  return static_cast<double>(n) / static_cast<double>(cells.size());
}

int default_thread_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

GridResult render_slice(const SliceSpec& spec, const Viewport& vp, const ClassifierConfig& cfg, int threads) {
  const auto start = std::chrono::steady_clock::now();
  validate(spec);
  GridResult g = prepare(spec.kind == SliceKind::CubicPer1 ? GridKind::CubicSlice : GridKind::ParameterSlice, vp, cfg);
  g.spec = spec;
  for_each_pixel(vp, threads, [&](int i, int j) {
    g.cells[static_cast<std::size_t>(j) * vp.pixels_x + i] = classify_parameter(SlicePoint{spec, vp.point(i, j)}, cfg);
  });
  g.seconds = seconds_since(start);
  return g;
}

GridResult render_dynplane(const MapParams& p, const Viewport& vp, const ClassifierConfig& cfg, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const RationalMap f(p);
  const TrappingRegion region = trapping_region(p);
  GridResult g = prepare(GridKind::DynamicalPlane, vp, cfg);
  g.map = p;
  for_each_pixel(vp, threads, [&](int i, int j) {
    PixelClass& cell = g.cells[static_cast<std::size_t>(j) * vp.pixels_x + i];
    cell.orbit1 = classify_orbit(f, vp.point(i, j), region, cfg);
    cell.orbit2 = cell.orbit1;
    cell.in_connectedness_locus = !cell.orbit1.escaped();
  });
  g.seconds = seconds_since(start);
  return g;
}

GridResult render_cubic_slice(Complex mu, const Viewport& vp, const ClassifierConfig& cfg, int threads) {
  SliceSpec spec;
  spec.kind = SliceKind::CubicPer1;
  spec.d = 2;
  spec.lambda = mu;
  return render_slice(spec, vp, cfg, threads);
}

Viewport default_dynplane_viewport(const MapParams& p, int pixels_x, int pixels_y) {
  Viewport vp;
  vp.center = {0.0, 0.0};
  vp.width = 2.5 * trapping_region(p).outer;
  vp.pixels_x = pixels_x;
  vp.pixels_y = pixels_y;
  return vp;
}

}  // namespace ratslice
