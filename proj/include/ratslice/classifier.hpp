#pragma once

#include <optional>
#include <string_view>

#include "ratslice/complex.hpp"
#include "ratslice/family.hpp"
#include "ratslice/slices.hpp"

namespace ratslice {

/// Annulus inner <= |z| <= outer. Outside it the orbit is attracted to 0
/// (|z| < inner) or to infinity (|z| > outer); both complementary disks are
/// forward invariant.
struct TrappingRegion {
  double inner = 0.0;
  double outer = 0.0;
  /// Set when the computed radii came out inverted and were swapped.
  bool widened = false;

  bool contains(double r) const { return r >= inner && r <= outer; }
};

/// Radii
///   inner = min{|a|/2, |g|/(2|b|), (|g|/(3|a|))^(1/(d-1))}
///   outer = max{2|a|, 2|g|/|b|, (3|b|)^(1/(d-1))}
/// for (a, b, g) = (alpha, beta, gamma). Terms that divide by a vanishing
/// alpha or beta are dropped; in their place alpha == 0 contributes
/// (|g|/2)^(1/d) to inner and beta == 0 contributes (2|g|)^(1/d) to outer, which
/// keeps the complementary disks invariant. Throws DegenerateMap.
TrappingRegion trapping_region(const MapParams& p);

struct ClassifierConfig {
  int max_iter = 4000;
  double escape_magnitude = 1e12;
  double eps_cycle = 1e-10;
  double eps_attract = 1e-6;
  int max_period = 64;

  /// Throws InvalidArgument unless every field is positive and
  /// max_iter >= 4 * max_period.
  void validate() const;

  bool operator==(const ClassifierConfig&) const = default;
};

enum class OrbitLabel { EscapeZero, EscapeInf, MarkedCycle, OtherCycle, BoundedUndecided, Singular };

/// Fixed CSV tokens: ESC0, ESCINF, MARKED, OTHER, UNDEC, SING.
std::string_view token(OrbitLabel label);
std::optional<OrbitLabel> parse_token(std::string_view text);

struct OrbitVerdict {
  OrbitLabel label = OrbitLabel::BoundedUndecided;
  int iterations_used = 0;
  /// Present iff label is MarkedCycle or OtherCycle.
  std::optional<int> period;
  std::optional<Complex> multiplier_estimate;
  /// One refined point of the detected cycle.
  std::optional<Complex> cycle_point;
  /// Blaschke unit-radius slices: the detected cycle lies on the unit circle.
  bool resonant = false;

  bool decided() const { return label != OrbitLabel::BoundedUndecided; }
  bool escaped() const {
    return label == OrbitLabel::EscapeZero || label == OrbitLabel::EscapeInf || label == OrbitLabel::Singular;
  }
  bool operator==(const OrbitVerdict&) const = default;
};

struct PixelClass {
  OrbitVerdict orbit1;
  OrbitVerdict orbit2;
  bool in_connectedness_locus = false;

  bool operator==(const PixelClass&) const = default;
};

/// Both critical orbits stay bounded (no escape, no singular label).
inline bool in_locus(const OrbitVerdict& a, const OrbitVerdict& b) { return !a.escaped() && !b.escaped(); }

/// The marked point of the normalized slices.
inline const Complex kMarkedPoint{1.0, 0.0};

/// Runs one orbit from z0. Escape to infinity is confirmed once |z| exceeds both
/// the outer radius and cfg.escape_magnitude; escape to 0 once |z| is below the
/// inner radius and below inner^2/outer (or 1e-12). Bounded orbits are scanned
/// for returns with Brent-style doubling windows of length <= max_period; a
/// return is refined by Newton's method on f^p(z) - z before it is accepted.
OrbitVerdict classify_orbit(const RationalMap& f, Complex z0, const TrappingRegion& region,
                            const ClassifierConfig& cfg);
OrbitVerdict classify_orbit(const MapParams& p, Complex z0, const TrappingRegion& region,
                            const ClassifierConfig& cfg);

/// Classifies both free critical orbits of the slice member at pt. Never
/// throws on slice degeneracies: those become Singular labels. On the
/// unit-radius Blaschke slice the orbits are kept on the unit circle, so they
/// end as cycles or BoundedUndecided.
PixelClass classify_parameter(const SlicePoint& pt, const ClassifierConfig& cfg);

/// Cubic orbit: EscapeInf once |z| > escape_radius(), otherwise cycle
/// detection as above (cycles are always OtherCycle).
OrbitVerdict classify_cubic_orbit(const CubicMap& P, Complex z0, const ClassifierConfig& cfg);
PixelClass classify_cubic_parameter(Complex b, Complex mu, const ClassifierConfig& cfg);

}  // namespace ratslice
