#include "ratslice/palette.hpp"

namespace ratslice {

namespace {

Rgb mix(Rgb a, Rgb b, double t) {
  auto lerp = [t](std::uint8_t x, std::uint8_t y) {
    return static_cast<std::uint8_t>(x + (static_cast<int>(y) - static_cast<int>(x)) * t + 0.5);
  };
  return {lerp(a.r, b.r), lerp(a.g, b.g), lerp(a.b, b.b)};
}

const OrbitVerdict& representative(const PixelClass& px) {
  const OrbitVerdict& a = px.orbit1;
  const OrbitVerdict& b = px.orbit2;
  if (a.label == OrbitLabel::Singular) return a;
  if (b.label == OrbitLabel::Singular) return b;
  if (a.escaped() && b.escaped()) return b.iterations_used < a.iterations_used ? b : a;
  if (a.escaped()) return a;
  if (b.escaped()) return b;
  if (b.label == OrbitLabel::OtherCycle) return b;
  if (a.label == OrbitLabel::OtherCycle) return a;
  if (b.label == OrbitLabel::MarkedCycle) return b;
  if (a.label == OrbitLabel::MarkedCycle) return a;
  return b;
}

}  // namespace

std::optional<Palette> Palette::preset(std::string_view name) {
  Palette p;
  p.name_ = std::string(name);
  if (name == "classic") {
    p.escape_zero_ = {238, 160, 58};
    p.escape_inf_lo_ = {12, 28, 84};
    p.escape_inf_hi_ = {170, 205, 250};
    p.band_period_ = 16;
    p.marked_ = {200, 30, 40};
    p.period_colors_ = {{{60, 170, 80}, {150, 60, 170}, {230, 210, 60}, {40, 180, 190},
                         {220, 110, 160}, {120, 120, 40}, {90, 140, 230}, {250, 250, 250}}};
    p.undecided_ = {0, 0, 0};
    p.singular_ = {255, 255, 255};
    return p;
  }
  if (name == "mono") {
    p.escape_zero_ = {255, 255, 255};
    p.escape_inf_lo_ = {255, 255, 255};
    p.escape_inf_hi_ = {255, 255, 255};
    p.marked_ = {0, 0, 0};
    p.period_colors_.fill(Rgb{0, 0, 0});
    p.undecided_ = {0, 0, 0};
    p.singular_ = {128, 128, 128};
    return p;
  }
  if (name == "basins") {
    p.escape_zero_ = {250, 220, 90};
    p.escape_inf_lo_ = {20, 60, 140};
    p.escape_inf_hi_ = {20, 60, 140};
    p.marked_ = {210, 40, 40};
    p.period_colors_ = {{{40, 160, 70}, {140, 60, 170}, {240, 140, 40}, {40, 170, 180},
                         {200, 100, 150}, {110, 110, 40}, {80, 130, 220}, {220, 220, 220}}};
    p.undecided_ = {0, 0, 0};
    p.singular_ = {255, 255, 255};
    return p;
  }
  return std::nullopt;
}

std::vector<std::string> Palette::preset_names() { return {"classic", "mono", "basins"}; }

Rgb Palette::color(const OrbitVerdict& v) const {
  switch (v.label) {
    case OrbitLabel::EscapeZero: return escape_zero_;
    case OrbitLabel::EscapeInf: {
      const int phase = v.iterations_used % (2 * band_period_);
      const int tri = phase < band_period_ ? phase : 2 * band_period_ - phase;
      return mix(escape_inf_lo_, escape_inf_hi_, static_cast<double>(tri) / band_period_);
    }
    case OrbitLabel::MarkedCycle: return marked_;
    case OrbitLabel::OtherCycle: return period_colors_[static_cast<std::size_t>(v.period.value_or(0) % 8)];
    case OrbitLabel::BoundedUndecided: return undecided_;
    case OrbitLabel::Singular: return singular_;
  }
  return singular_;
}

Rgb Palette::color(const PixelClass& px, GridKind kind) const {
  if (kind == GridKind::DynamicalPlane) return color(px.orbit1);
  return color(representative(px));
}

void Palette::set(OrbitLabel label, Rgb c) {
  switch (label) {
    case OrbitLabel::EscapeZero: escape_zero_ = c; break;
    case OrbitLabel::EscapeInf: escape_inf_lo_ = escape_inf_hi_ = c; break;
    case OrbitLabel::MarkedCycle: marked_ = c; break;
    case OrbitLabel::OtherCycle: period_colors_.fill(c); break;
    case OrbitLabel::BoundedUndecided: undecided_ = c; break;
    case OrbitLabel::Singular: singular_ = c; break;
  }
}

std::vector<std::uint8_t> rasterize(const GridResult& g, const Palette& pal) {
  std::vector<std::uint8_t> rgb;
  rgb.reserve(g.cells.size() * 3);
  for (const PixelClass& px : g.cells) {
    const Rgb c = pal.color(px, g.kind);
    rgb.push_back(c.r);
    rgb.push_back(c.g);
    rgb.push_back(c.b);
  }
  return rgb;
}

}  // namespace ratslice
