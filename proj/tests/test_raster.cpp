#include <doctest.h>

#include <cmath>

#include "ratslice/palette.hpp"
#include "ratslice/raster.hpp"
#include "support.hpp"

using namespace ratslice;

namespace {

SliceSpec s1_lambda_half(int d) {
  SliceSpec spec{SliceKind::S1Lambda, d};
  spec.theta = RotationNumber::rational(1, 2);
  return spec;
}

bool same_label_pair(const PixelClass& a, const PixelClass& b) {
  return (a.orbit1.label == b.orbit1.label && a.orbit2.label == b.orbit2.label) ||
         (a.orbit1.label == b.orbit2.label && a.orbit2.label == b.orbit1.label);
}

}  // namespace

TEST_CASE("viewport: pixel centers") {
  const Viewport vp{{0.25, -0.5}, 3.0, 6, 4};
  CHECK(vp.height() == 2.0);
  CHECK(vp.step() == 0.5);
  // Top-left center sits half a step in from the corner.
  CHECK(vp.point(0, 0) == Complex(0.25 - 1.25, -0.5 + 0.75));
  CHECK(vp.point(5, 3) == Complex(0.25 + 1.25, -0.5 - 0.75));
  for (int j = 0; j < vp.pixels_y; ++j) {
    for (int i = 0; i < vp.pixels_x; ++i) {
      const double re = vp.center.real() + ((i + 0.5) / vp.pixels_x - 0.5) * vp.width;
      const double im = vp.center.imag() + (0.5 - (j + 0.5) / vp.pixels_y) * vp.height();
      CHECK(std::abs(vp.point(i, j) - Complex(re, im)) < 1e-15);
    }
  }
  CHECK_THROWS(Viewport{{0, 0}, 0.0, 4, 4}.validate());
  CHECK_THROWS(Viewport{{0, 0}, 1.0, 0, 4}.validate());
}

TEST_CASE("render_slice matches a sequential loop") {
  const SliceSpec spec{SliceKind::S1Zero, 3};
  const Viewport vp{{-0.5, 0.25}, 3.0, 16, 16};
  const ClassifierConfig cfg;
  const GridResult g = render_slice(spec, vp, cfg, 4);
  REQUIRE(g.cells.size() == 256);
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) {
      CHECK(g.at(i, j) == classify_parameter({spec, vp.point(i, j)}, cfg));
    }
  }
}

TEST_CASE("worker count does not change the result") {
  const ClassifierConfig cfg;
  const Palette pal = *Palette::preset("classic");
  for (const SliceSpec& spec : {SliceSpec{SliceKind::S2Zero, 3}, s1_lambda_half(3)}) {
    const Viewport vp{{0.1, 0.0}, 6.0, 80, 40};
    const GridResult g1 = render_slice(spec, vp, cfg, 1);
    const GridResult g2 = render_slice(spec, vp, cfg, 2);
    const GridResult g8 = render_slice(spec, vp, cfg, 8);
    CHECK(g1.cells == g2.cells);
    CHECK(g1.cells == g8.cells);
    CHECK(rasterize(g1, pal) == rasterize(g8, pal));
  }
}

TEST_CASE("halving the width reproduces the central quadrant of a double-resolution render") {
  const SliceSpec spec{SliceKind::S1Zero, 3};
  const ClassifierConfig cfg;
  const Viewport big{{-1.0, 0.5}, 8.0, 64, 48};
  const Viewport half{big.center, 4.0, 32, 24};
  const GridResult gb = render_slice(spec, big, cfg);
  const GridResult gh = render_slice(spec, half, cfg);
  for (int j = 0; j < half.pixels_y; ++j) {
    for (int i = 0; i < half.pixels_x; ++i) {
      const int bi = i + half.pixels_x / 2;
      const int bj = j + half.pixels_y / 2;
      REQUIRE(big.point(bi, bj) == half.point(i, j));
      CHECK(gb.at(bi, bj) == gh.at(i, j));
    }
  }
}

TEST_CASE("real multiplier: render is mirror-symmetric about the real axis") {
  const ClassifierConfig cfg;
  const Viewport vp{{-2.0, 0.0}, 14.0, 65, 65};
  const GridResult g = render_slice(s1_lambda_half(3), vp, cfg);
  for (int j = 0; j < vp.pixels_y; ++j) {
    for (int i = 0; i < vp.pixels_x; ++i) {
      const int jm = vp.pixels_y - 1 - j;
      REQUIRE(vp.point(i, jm) == std::conj(vp.point(i, j)));
      CHECK(g.at(i, j).orbit1.label == g.at(i, jm).orbit1.label);
      CHECK(g.at(i, j).orbit2.label == g.at(i, jm).orbit2.label);
    }
  }
}

TEST_CASE("dynamical plane of z^3") {
  const MapParams cube{{0, 0}, {0, 0}, {1, 0}, 2};
  const Viewport vp{{0, 0}, 3.0, 256, 256};
  const GridResult g = render_dynplane(cube, vp, ClassifierConfig{});
  int inside = 0, inside_ok = 0, outside = 0, outside_ok = 0;
  for (int j = 0; j < 256; ++j) {
    for (int i = 0; i < 256; ++i) {
      const double r = std::abs(vp.point(i, j));
      const OrbitLabel l = g.at(i, j).orbit1.label;
      CHECK(g.at(i, j).orbit2.label == l);
      if (r < 0.9) {
        ++inside;
        inside_ok += l == OrbitLabel::EscapeZero;
      } else if (r > 1.1) {
        ++outside;
        outside_ok += l == OrbitLabel::EscapeInf;
      }
    }
  }
  CHECK(inside_ok >= 0.99 * inside);
  CHECK(outside_ok >= 0.99 * outside);
}

TEST_CASE("dynamical plane: undecided set of z^3/(z+1)") {
  const MapParams p{{0, 0}, {1, 0}, {1, 0}, 2};
  const GridResult g = render_dynplane(p, default_dynplane_viewport(p, 256, 256), ClassifierConfig{});
  // Reference run: 4898 ESC0, 60638 ESCINF, nothing undecided.
  CHECK(g.undecided_fraction() < 0.05);
  CHECK(g.undecided_fraction() == 0.0);
}

TEST_CASE("dynamical plane: marked point of a period-1 member") {
  const MapParams p = s1_zero({-0.5, 0.75}, 3);
  const Viewport vp{{1, 0}, 0.5, 33, 33};
  REQUIRE(vp.point(16, 16) == Complex(1, 0));
  const GridResult g = render_dynplane(p, vp, ClassifierConfig{});
  CHECK(g.at(16, 16).orbit1.label == OrbitLabel::MarkedCycle);
  CHECK(g.kind == GridKind::DynamicalPlane);
}

TEST_CASE("dynamical plane: default viewport") {
  const MapParams p{{1, 0}, {1, 0}, {2, 0}, 2};
  const Viewport vp = default_dynplane_viewport(p, 100, 50);
  CHECK(vp.center == Complex(0, 0));
  CHECK(vp.width == 10.0);
  CHECK(vp.pixels_y == 50);
}

TEST_CASE("cubic slice with mu = 0 is symmetric under b -> -b") {
  const Viewport vp{{0, 0}, 6.0, 64, 64};
  const GridResult g = render_cubic_slice({0, 0}, vp, ClassifierConfig{});
  CHECK(g.kind == GridKind::CubicSlice);
  for (int j = 0; j < 64; ++j) {
    for (int i = 0; i < 64; ++i) {
      const int im = 63 - i, jm = 63 - j;
      REQUIRE(vp.point(im, jm) == -vp.point(i, j));
      CHECK(same_label_pair(g.at(i, j), g.at(im, jm)));
      CHECK(g.at(i, j).in_connectedness_locus == g.at(im, jm).in_connectedness_locus);
    }
  }
}

TEST_CASE("cubic slice: trivial member is in the locus, far parameters are not") {
  const Viewport vp{{0, 0}, 40.0, 41, 41};
  REQUIRE(vp.point(20, 20) == Complex(0, 0));
  const GridResult g = render_cubic_slice({0, 0}, vp, ClassifierConfig{});
  CHECK(g.at(20, 20).in_connectedness_locus);
  CHECK_FALSE(g.at(0, 0).in_connectedness_locus);
  CHECK_FALSE(g.at(40, 40).in_connectedness_locus);
}

TEST_CASE("undecided fraction") {
  GridResult g;
  g.viewport = {{0, 0}, 1.0, 2, 2};
  g.cells.resize(4);
  g.cells[0].orbit1.label = OrbitLabel::EscapeInf;
  g.cells[0].orbit2.label = OrbitLabel::EscapeInf;
  g.cells[1].orbit1.label = OrbitLabel::EscapeInf;
  g.cells[2].orbit2.label = OrbitLabel::MarkedCycle;
  g.cells[3].orbit1.label = OrbitLabel::MarkedCycle;
  g.cells[3].orbit2.label = OrbitLabel::MarkedCycle;
  // Cells 1 and 2 each still carry one undecided orbit.
  CHECK(g.undecided_fraction() == 0.5);
}
