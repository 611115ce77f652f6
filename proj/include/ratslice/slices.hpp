#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ratslice/complex.hpp"
#include "ratslice/family.hpp"

namespace ratslice {

/// |s - s_singular| below this flags a singular slice coordinate.
inline constexpr double kEpsSliceSingular = 1e-9;

enum class SliceKind { S1Zero, S2Zero, S1Lambda, S2Lambda, Blaschke, CubicPer1 };
enum class Sheet { Plus, Minus };
enum class View { Raw, Cayley };

std::string_view to_string(SliceKind kind);
std::string_view to_string(Sheet sheet);
std::string_view to_string(View view);
std::optional<SliceKind> parse_slice_kind(std::string_view text);
std::optional<Sheet> parse_sheet(std::string_view text);
std::optional<View> parse_view(std::string_view text);

/// Rotation number theta of a neutral multiplier lambda = exp(2 pi i theta).
/// Rational values are kept as a reduced fraction p/q with q > 0.
class RotationNumber {
 public:
  static RotationNumber rational(long long p, long long q);
  static RotationNumber real(double theta);
  /// Accepts "p/q" or a decimal literal.
  static RotationNumber parse(std::string_view text);

  bool is_rational() const { return rational_; }
  long long numerator() const { return p_; }
  long long denominator() const { return q_; }
  double value() const;

  /// exp(2 pi i theta). Rational angles that are multiples of a quarter turn
  /// come out exact (theta = 1/2 gives exactly -1).
  Complex multiplier() const;

  /// "p/q" for rationals, 17 significant digits otherwise.
  std::string to_string() const;

  bool operator==(const RotationNumber&) const = default;

 private:
  bool rational_ = true;
  long long p_ = 0;
  long long q_ = 1;
  double value_ = 0.0;
};

/// A one-complex-dimensional slice of the family.
struct SliceSpec {
  SliceKind kind = SliceKind::S1Zero;
  int d = 2;
  /// When set, lambda is derived from it; otherwise `lambda` is used as given.
  /// For CubicPer1 the multiplier plays the role of mu.
  std::optional<RotationNumber> theta;
  Complex lambda{0.0, 0.0};
  Sheet sheet = Sheet::Plus;
  double r_a = 1.0;
  double r_b = 1.0;
  View view = View::Raw;

  Complex multiplier() const { return theta ? theta->multiplier() : lambda; }

  bool operator==(const SliceSpec&) const = default;
};

/// Throws InvalidArgument / LambdaEqualsDegree for specs that cannot be resolved
/// anywhere (bad degree or radii, lambda == d for S1Lambda).
void validate(const SliceSpec& spec);

/// A coordinate in a slice. For Blaschke, s = omega1 + i*omega2 (torus
/// coordinates, reduced modulo 1 on resolution).
struct SlicePoint {
  SliceSpec spec;
  Complex s{0.0, 0.0};
};

/// Normalized family with the marked critical point at z = 1:
///   f_{a,b}(z) = a z^d (b z + (1-db)/(d-1)) / (((d-b)/(d-1)) z - 1).
MapParams normalized_family(Complex a, Complex b, int d);

/// The second critical point of the normalized family, (1 - d b) / (b (b - d)).
Complex normalized_free_critical_point(Complex b, int d);

/// Period-1 superattracting slice (a = 1). Singular for b in {0, 1, d}.
MapParams s1_zero(Complex b, int d);

/// b(a) making z = 1 a superattracting 2-cycle.
Complex s2_zero_b(Complex a, int d);

/// Period-2 superattracting slice in the coordinate a.
MapParams s2_zero(Complex a, int d);

/// Fixed point z = 1 with multiplier lambda, free coordinate beta.
MapParams s1_lambda(Complex beta, Complex lambda, int d);

/// Coefficients of the quadratic A2 alpha^2 + A1 alpha + A0 = 0 whose roots
/// give the 2-cycle {1, t} of multiplier lambda, together with the affine
/// maps beta = b0 + b1 alpha, gamma = g0 + g1 alpha.
struct S2LambdaSystem {
  Complex a2, a1, a0;
  Complex b0, b1;
  Complex g0, g1;
};
S2LambdaSystem s2_lambda_system(Complex t, Complex lambda, int d);

/// Root of the quadratic on the requested sheet: (-A1 +/- sqrt(disc)) / (2 A2)
/// with the principal square root.
Complex s2_lambda_alpha(const S2LambdaSystem& sys, Sheet sheet);

/// 2-cycle {1, t} with multiplier lambda.
MapParams s2_lambda(Complex t, Complex lambda, int d, Sheet sheet);

/// Normalized family at a = r_a e^{2 pi i omega1}, b = r_b e^{2 pi i omega2}.
/// With unit radii these are Blaschke products preserving the unit circle.
MapParams blaschke(double omega1, double omega2, double r_a, double r_b, int d);

/// s -> (s - i)/(s + i). Infinity maps to 1; throws PoleAtMinusI at s = -i.
Complex cayley_view(Complex s);
/// Inverse of cayley_view: c -> i (1 + c)/(1 - c), with 1 -> infinity.
Complex cayley_inverse(Complex c);

/// Cubic comparison map P(z) = mu z + b z^2 + z^3.
struct CubicMap {
  Complex mu;
  Complex b;

  Complex operator()(Complex z) const {
    if (is_infinite(z)) return kInfinity;
    const Complex w = z * (mu + z * (b + z));
    return std::norm(w) <= kOverflowMagnitude * kOverflowMagnitude ? w : kInfinity;
  }
  Complex derivative(Complex z) const { return mu + z * (2.0 * b + 3.0 * z); }
  Complex derivative_or_infinity(Complex z) const {
    return is_infinite(z) ? kInfinity : derivative(z);
  }

  /// Roots of mu + 2 b z + 3 z^2, "+" root first.
  std::pair<Complex, Complex> critical_points() const;

  /// |P(z)| >= 2|z| whenever |z| >= R = max(2, 2(1 + |mu| + |b|)).
  double escape_radius() const;
};

CubicMap cubic_per1(Complex b, Complex mu);

/// Maps a slice point to a family member. With View::Cayley the coordinate is
/// first pulled back through cayley_inverse. Throws the delegate's errors.
MapParams resolve(const SlicePoint& pt);

/// Slice coordinate after undoing the display view (may be infinity).
Complex raw_coordinate(const SlicePoint& pt);

/// Resolved member together with its two free critical points in the order the
/// classifier uses: for the normalized slices (S1Zero, S2Zero, Blaschke) the
/// marked point z = 1 comes first; otherwise the radical-formula order. Free
/// critical points that have merged into 0 or infinity are reported as such.
struct ResolvedPoint {
  MapParams params;
  Complex critical1;
  Complex critical2;
};
ResolvedPoint resolve_with_critical_points(const SlicePoint& pt);

/// Critical orbit seeds of an arbitrary member: the radical formula for
/// beta != 0, otherwise the finite root and infinity (0 and infinity for the
/// monomial).
std::pair<Complex, Complex> critical_orbit_seeds(const MapParams& p);

}  // namespace ratslice
