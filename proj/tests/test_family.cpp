#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ratslice/error.hpp"
#include "ratslice/family.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ratslice;
using testing::Rng;

namespace {

MapParams random_params(Rng& rng) { return testing::random_member(rng, false); }

using testing::derivative_scale;

}  // namespace

TEST_CASE("evaluate: worked values") {
  CHECK(evaluate({{0, 0}, {0, 0}, {1, 0}, 2}, {2, 0}) == Complex(8, 0));
  const Complex v = evaluate({{1, 0}, {1, 0}, {2, 0}, 2}, {1, 0});
  CHECK(std::abs(v - Complex(2.0 / 3.0, 0)) < 1e-15);
}

TEST_CASE("evaluate: 0 and infinity are fixed") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const MapParams p = random_params(rng);
    CHECK(evaluate(p, {0, 0}) == Complex(0, 0));
    CHECK(is_infinite(evaluate(p, kInfinity)));
  }
  MapParams poly{{2, 0}, {0, 0}, {1, 0}, 3};
  CHECK(is_infinite(evaluate(poly, kInfinity)));
}

TEST_CASE("evaluate: pole and overflow go to infinity") {
  MapParams p{{1, 0}, {1, 0}, {2, 0}, 2};
  CHECK(is_infinite(evaluate(p, {-2, 0})));
  CHECK(is_infinite(evaluate(p, {1e80, 0})));
}

TEST_CASE("degenerate members are rejected") {
  CHECK_FALSE(MapParams{{2, 0}, {0.5, 0}, {1, 0}, 2}.non_degenerate());
  try {
    RationalMap f(MapParams{{2, 0}, {0.5, 0}, {1, 0}, 2});
    FAIL("expected DegenerateMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMap);
  }
  CHECK_THROWS_AS(evaluate({{2, 0}, {0.5, 0}, {1, 0}, 2}, {1, 0}), Error);
  CHECK_THROWS_AS(RationalMap(MapParams{{0, 0}, {0, 0}, {1, 0}, 1}), Error);
}

TEST_CASE("derivative: worked values") {
  CHECK(std::abs(derivative({{0, 0}, {0, 0}, {1, 0}, 2}, {2, 0}) - Complex(12, 0)) < 1e-12);
  CHECK(std::abs(derivative({{0, 0}, {1, 0}, {1, 0}, 2}, {-1.5, 0})) < 1e-15);
}

TEST_CASE("derivative: pole raises PoleEvaluation") {
  try {
    derivative({{0, 0}, {1, 0}, {1, 0}, 2}, {-1, 0});
    FAIL("expected PoleEvaluation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleEvaluation);
  }
  RationalMap f({{0, 0}, {1, 0}, {1, 0}, 2});
  CHECK(is_infinite(f.derivative_or_infinity({-1, 0})));
}

TEST_CASE("derivative: agrees with central differences") {
  Rng rng(12);
  const double h = 1e-6;
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    const MapParams p = random_params(rng);
    const RationalMap f(p);
    const Complex z = rng.polar(0.2, 3.0);
    // Stay away from the pole and from zeros of f'.
    if (std::abs(p.beta * z + p.gamma) < 0.2 * std::abs(p.gamma)) continue;
    const Complex df = f.derivative(z);
    if (std::abs(df) < 1e-3 * derivative_scale(f, z)) continue;
    const Complex fd = (f(z + h) - f(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - df) <= 1e-6 * std::abs(df));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("critical points: worked example") {
  const auto [z1, z2] = critical_points({{0, 0}, {1, 0}, {1, 0}, 2});
  const bool ordered = std::abs(z1 - Complex(-1.5, 0)) < 1e-15 && std::abs(z2) < 1e-15;
  const bool swapped = std::abs(z2 - Complex(-1.5, 0)) < 1e-15 && std::abs(z1) < 1e-15;
  CHECK((ordered || swapped));
}

TEST_CASE("critical points: beta = 0 and the monomial") {
  try {
    critical_points({{0, 0}, {0, 0}, {1, 0}, 2});
    FAIL("expected BetaZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BetaZero);
  }
  CHECK(free_critical_points({{0, 0}, {0, 0}, {1, 0}, 2}).empty());
  // f = z^3 (z + 2): f' = z^2 (4z + 6).
  const auto pts = free_critical_points({{2, 0}, {0, 0}, {1, 0}, 3});
  REQUIRE(pts.size() == 1);
  CHECK(std::abs(pts[0] - Complex(-1.5, 0)) < 1e-15);
}

TEST_CASE("critical points: residual over random members") {
  CHECK(testing::critical_point_residual(1000, 13) <= 1e-8);
}

TEST_CASE("critical points: '+' root first") {
  // Quadratic with real roots of different size so the order is visible.
  const MapParams p{{1, 0}, {1, 0}, {3, 0}, 2};
  const RationalMap f(p);
  const auto& q = f.derivative_quadratic();
  const Complex disc = std::sqrt(q.c1 * q.c1 - 4.0 * q.c2 * q.c0);
  const Complex plus = -(q.c1 + disc) / (2.0 * q.c2);
  const auto [z1, z2] = critical_points(p);
  CHECK(std::abs(z1 - plus) < 1e-12 * std::max(1.0, std::abs(plus)));
  CHECK(std::abs(z2 - plus) > 1e-3);
}

TEST_CASE("conjugation symmetry is exact") {
  Rng rng(14);
  for (int k = 0; k < 500; ++k) {
    const MapParams p = random_params(rng);
    const Complex z = rng.polar(0.1, 5.0);
    CHECK(evaluate(conj(p), std::conj(z)) == std::conj(evaluate(p, z)));
  }
}

TEST_CASE("degree sanity at large |z|: f(z) ~ z^d / beta") {
  Rng rng(15);
  for (int k = 0; k < 200; ++k) {
    MapParams p = random_params(rng);
    p.d = rng.integer(2, 5);
    const Complex z = std::polar(1e8, rng.uniform(0.0, 6.28));
    const double ratio = std::abs(evaluate(p, z)) / std::pow(1e8, p.d);
    CHECK(std::abs(ratio * std::abs(p.beta) - 1.0) < 0.01);
  }
}

TEST_CASE("cycle multipliers") {
  const MapParams cube{{0, 0}, {0, 0}, {1, 0}, 2};
  CHECK(cycle_multiplier(cube, {{0, 0}}) == Complex(0, 0));
  CHECK(std::abs(cycle_multiplier(cube, {{1, 0}}) - Complex(3, 0)) < 1e-15);
  // 2-cycle of z^3 on the unit circle: e^{2 pi i/4} -> e^{6 pi i/4}.
  const Complex w = std::polar(1.0, std::numbers::pi / 2);
  const Cycle c = make_cycle(cube, {w, w * w * w});
  CHECK(c.period() == 2);
  CHECK(std::abs(c.multiplier - Complex(9, 0)) < 1e-12);
  try {
    cycle_multiplier(cube, {{0.5, 0}});
    FAIL("expected NotACycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACycle);
  }
  CHECK_THROWS_AS(make_cycle(cube, {{1, 0}, {1, 0}}), Error);
}
