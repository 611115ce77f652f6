#pragma once

#include <utility>
#include <vector>

#include "ratslice/complex.hpp"

namespace ratslice {

/// Relative tolerance for gamma - alpha*beta ~ 0 and for pole proximity.
inline constexpr double kEpsSingular = 1e-12;

/// Default relative tolerance for accepting a list of points as a cycle.
inline constexpr double kEpsCycle = 1e-8;

/// One member of the family f(z) = z^d (z + alpha) / (beta z + gamma).
/// 0 and infinity are superattracting fixed points for every member.
struct MapParams {
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
  Complex gamma{1.0, 0.0};
  int d = 2;

  /// gamma - alpha*beta != 0, relative to the coefficient magnitudes.
  bool non_degenerate() const;

  bool operator==(const MapParams&) const = default;
};

/// Componentwise complex conjugate; f_conj(conj z) = conj f(z).
MapParams conj(const MapParams& p);

/// Validated, evaluation-ready form of MapParams. Construction throws
/// DegenerateMap (or InvalidArgument for d < 2); afterwards every call is a
/// pure function of its argument.
class RationalMap {
 public:
  explicit RationalMap(const MapParams& p);

  const MapParams& params() const { return p_; }
  int degree() const { return p_.d; }

  /// f(z) on the Riemann sphere. The pole -gamma/beta and any intermediate
  /// beyond kOverflowMagnitude map to infinity.
  Complex operator()(Complex z) const;

  /// f'(z) in closed form. Throws PoleEvaluation near -gamma/beta.
  Complex derivative(Complex z) const;

  /// Same as derivative() but returns infinity at the pole instead of throwing.
  Complex derivative_or_infinity(Complex z) const;

  /// Quadratic factor of the derivative numerator,
  /// f'(z) = z^(d-1) * (c2 z^2 + c1 z + c0) / (beta z + gamma)^2.
  struct Quadratic {
    Complex c2, c1, c0;
  };
  const Quadratic& derivative_quadratic() const { return quad_; }

 private:
  MapParams p_;
  Quadratic quad_;
};

Complex evaluate(const MapParams& p, Complex z);
Complex derivative(const MapParams& p, Complex z);

/// The two free critical points from the closed-form radical expression,
/// "+" root first. Throws BetaZero when beta == 0.
std::pair<Complex, Complex> critical_points(const MapParams& p);

/// Finite free critical points for any non-degenerate member. Equals
/// critical_points() when beta != 0; for beta == 0 the second free critical
/// point has merged into infinity and only -d*alpha/(d+1) remains (nothing for
/// the monomial alpha == beta == 0).
std::vector<Complex> free_critical_points(const MapParams& p);

/// A periodic orbit with its multiplier.
struct Cycle {
  std::vector<Complex> points;
  Complex multiplier{0.0, 0.0};

  int period() const { return static_cast<int>(points.size()); }
};

/// Product of f' over the listed points. Throws NotACycle unless
/// |f(points[i]) - points[i+1 mod p]| <= tol * max(1, |points[i+1 mod p]|).
Complex cycle_multiplier(const MapParams& p, const std::vector<Complex>& points,
                         double tol = kEpsCycle);

/// Validated Cycle: the points must close up and be pairwise distinct.
Cycle make_cycle(const MapParams& p, std::vector<Complex> points, double tol = kEpsCycle);

}  // namespace ratslice
