#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace ratslice {

using Complex = std::complex<double>;

/// The point at infinity of the Riemann sphere. Any value with a non-finite
/// component is treated as infinity.
inline const Complex kInfinity{std::numeric_limits<double>::infinity(), 0.0};

/// Magnitudes beyond this are collapsed to infinity.
inline constexpr double kOverflowMagnitude = 1e150;

inline bool is_infinite(Complex z) {
  return !std::isfinite(z.real()) || !std::isfinite(z.imag());
}

/// z^n by repeated multiplication, n >= 0. A fixed multiplication order keeps
/// pow(conj(z), n) == conj(pow(z, n)) bit for bit. The products are written
/// out to skip the NaN recovery of the library multiply; callers only pass
/// finite z.
inline Complex ipow(Complex z, int n) {
  double re = 1.0, im = 0.0;
  const double a = z.real(), b = z.imag();
  for (int k = 0; k < n; ++k) {
    const double t = re * a - im * b;
    im = re * b + im * a;
    re = t;
  }
  return {re, im};
}

}  // namespace ratslice
