#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ratslice/classifier.hpp"
#include "ratslice/error.hpp"
#include "ratslice/family.hpp"
#include "ratslice/slices.hpp"
#include "support.hpp"

namespace testing {

using namespace ratslice;

struct ResidualReport {
  double worst = 0.0;
  int samples = 0;
  int rejected = 0;  // draws that raised a slice error and were redrawn
  std::string worst_at;
};

inline bool near_any(Complex s, std::initializer_list<double> bad, double tol) {
  return std::any_of(bad.begin(), bad.end(), [&](double v) { return std::abs(s - v) < tol; });
}

// Defining identities of each slice, checked by iterating the resolved member
// directly:
//   S1Zero   f(1) = 1, f'(1) = 0
//   S2Zero   f(f(1)) = 1, f'(1) f'(f(1)) = 0
//   S1Lambda f(1) = 1, f'(1) = lambda
//   S2Lambda f(1) = t, f(t) = 1, f'(1) f'(t) = lambda
// Derivative residuals are taken relative to max(1, |f'| at the other cycle
// point), since only the product is pinned.
inline double identity_residual(SliceKind kind, const MapParams& p, Complex s, Complex lambda) {
  const RationalMap f(p);
  const Complex one{1.0, 0.0};
  switch (kind) {
    case SliceKind::S1Zero:
      return std::max(std::abs(f(one) - one), std::abs(f.derivative(one)));
    case SliceKind::S2Zero: {
      const Complex t = f(one);
      const double r1 = std::abs(f(t) - one);
      const double r2 = std::abs(f.derivative(one) * f.derivative(t)) / std::max(1.0, std::abs(f.derivative(t)));
      return std::max(r1, r2);
    }
    case SliceKind::S1Lambda:
      return std::max(std::abs(f(one) - one), std::abs(f.derivative(one) - lambda));
    case SliceKind::S2Lambda: {
      const double r1 = std::abs(f(one) - s) / std::max(1.0, std::abs(s));
      const double r2 = std::abs(f(s) - one);
      const Complex d1 = f.derivative(one);
      const Complex dt = f.derivative(s);
      const double r3 = std::abs(d1 * dt - lambda) / std::max({1.0, std::abs(d1), std::abs(dt)});
      return std::max({r1, r2, r3});
    }
    default: return 0.0;
  }
}

// Random valid coordinates per slice kind: |s| log-uniform in [0.2, 5],
// d in [2, 6], lambda on and inside the unit circle. Outside this box the
// period-2 members become ill-conditioned in double precision (f(t) = 1 with
// |t|^d large forces t + alpha to cancel), so rounding alpha, beta, gamma alone
// pushes the forward residual past 1e-9.
inline ResidualReport slice_residual_suite(SliceKind kind, int n, std::uint64_t seed) {
  Rng rng(seed);
  ResidualReport rep;
  while (rep.samples < n) {
    const int d = rng.integer(2, 6);
    const Complex lambda = rng.unit_disk();
    const Complex s = rng.polar(0.2, 5.0);
    if (near_any(s, {0.0, 1.0, static_cast<double>(d)}, 1e-3)) continue;
    MapParams p;
    try {
      switch (kind) {
        case SliceKind::S1Zero: p = s1_zero(s, d); break;
        case SliceKind::S2Zero: p = s2_zero(s, d); break;
        case SliceKind::S1Lambda: p = s1_lambda(s, lambda, d); break;
        case SliceKind::S2Lambda:
          p = s2_lambda(s, lambda, d, rng.integer(0, 1) ? Sheet::Plus : Sheet::Minus);
          break;
        default: return rep;
      }
    } catch (const Error&) {
      ++rep.rejected;
      continue;
    }
    double r = 0.0;
    try {
      r = identity_residual(kind, p, s, lambda);
    } catch (const Error&) {
      // A cycle point sitting on the pole: not a valid member of the slice.
      ++rep.rejected;
      continue;
    }
    if (!(r <= rep.worst)) {
      rep.worst = std::isnan(r) ? INFINITY : r;
      rep.worst_at = "d=" + std::to_string(d) + " s=" + std::to_string(s.real()) + "," + std::to_string(s.imag());
    }
    ++rep.samples;
  }
  return rep;
}

// Random non-degenerate member. With `allow_zero`, about one draw in ten has
// alpha = 0 and one in ten has beta = 0.
inline MapParams random_member(Rng& rng, bool allow_zero) {
  MapParams p;
  do {
    const int shape = allow_zero ? rng.integer(0, 9) : 9;
    p.alpha = shape == 0 ? Complex{0, 0} : rng.polar(0.05, 20.0);
    p.beta = shape == 1 ? Complex{0, 0} : rng.polar(0.05, 20.0);
    p.gamma = rng.polar(0.05, 20.0);
    p.d = rng.integer(2, allow_zero ? 6 : 9);
  } while (!p.non_degenerate() ||
           std::abs(p.gamma - p.alpha * p.beta) < 1e-3 * std::max(std::abs(p.gamma), std::abs(p.alpha * p.beta)));
  return p;
}

// Magnitude of the terms making up f'(z); the residual of a root is measured
// against it.
inline double derivative_scale(const RationalMap& f, Complex z) {
  const auto& q = f.derivative_quadratic();
  const MapParams& p = f.params();
  const double r = std::abs(z);
  return std::pow(r, p.d - 1) * (std::abs(q.c2) * r * r + std::abs(q.c1) * r + std::abs(q.c0)) /
         std::norm(p.beta * z + p.gamma);
}

// Worst normalized |f'| at both closed-form critical points over n members.
inline double critical_point_residual(int n, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const MapParams p = random_member(rng, false);
    const RationalMap f(p);
    const auto [z1, z2] = critical_points(p);
    for (Complex z : {z1, z2}) {
      const double r = std::abs(f.derivative(z)) / std::max(1.0, derivative_scale(f, z));
      worst = std::isnan(r) ? INFINITY : std::max(worst, r);
    }
  }
  return worst;
}

// Orbits started in A are followed for `steps` iterations. Once an orbit has
// left A it must stay on that side: outside the outer radius |f(z)| >= |z|,
// inside the inner radius |f(z)| <= |z|. Returns the number of violations.
inline int invariance_violations(const MapParams& p, Rng& rng, int orbits, int steps) {
  const RationalMap f(p);
  const TrappingRegion A = trapping_region(p);
  int bad = A.inner > 0.0 && A.inner <= A.outer ? 0 : 1;
  for (int k = 0; k < orbits; ++k) {
    Complex z = std::polar(rng.uniform(A.inner, A.outer), rng.uniform(0.0, 2.0 * std::numbers::pi));
    int side = 0;  // -1 inside, +1 outside once A has been left
    for (int step = 0; step < steps && !is_infinite(z) && z != Complex(0, 0); ++step) {
      const Complex w = f(z);
      const double r = std::abs(z);
      const double rw = is_infinite(w) ? INFINITY : std::abs(w);
      if (side == 0 && r > A.outer) side = 1;
      if (side == 0 && r < A.inner) side = -1;
      if (side == 1 && !(rw > A.outer && rw >= r * (1.0 - 1e-12))) ++bad;
      if (side == -1 && !(rw < A.inner && rw <= r * (1.0 + 1e-12))) ++bad;
      z = w;
    }
  }
  return bad;
}

// Worst ||f(z)| - 1| over unit-radius Blaschke members and circle samples.
inline double blaschke_circle_residual(int maps, int samples, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < maps;) {
    const double w1 = rng.uniform(0.0, 1.0);
    const double w2 = rng.uniform(0.0, 1.0);
    const int d = rng.integer(2, 6);
    MapParams p;
    try {
      p = blaschke(w1, w2, 1.0, 1.0, d);
    } catch (const Error&) {
      continue;
    }
    ++k;
    const RationalMap f(p);
    for (int j = 0; j < samples; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform(0.0, 1.0));
      if (std::abs(p.beta * z + p.gamma) < 1e-6) continue;
      const double r = std::abs(std::abs(f(z)) - 1.0);
      worst = std::isnan(r) ? INFINITY : std::max(worst, r);
    }
  }
  return worst;
}

// Worst ||z2| - 1| for the free critical point of unit-radius Blaschke members.
inline double blaschke_critical_residual(int n, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < n;) {
    const double w2 = rng.uniform(0.0, 1.0);
    const int d = rng.integer(2, 8);
    if (std::abs(std::polar(1.0, 2.0 * std::numbers::pi * w2) - 1.0) < 1e-3) continue;
    ++k;
    SliceSpec spec{SliceKind::Blaschke, d};
    const ResolvedPoint r = resolve_with_critical_points({spec, {rng.uniform(0.0, 1.0), w2}});
    const double e = std::abs(std::abs(r.critical2) - 1.0) + std::abs(r.critical1 - Complex(1, 0));
    worst = std::isnan(e) ? INFINITY : std::max(worst, e);
  }
  return worst;
}

}  // namespace testing
