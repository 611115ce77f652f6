#include "ratslice/family.hpp"

#include <algorithm>
#include <string>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

double scale_of(const MapParams& p) {
  return std::max(std::abs(p.gamma), std::abs(p.alpha) * std::abs(p.beta));
}

}  // namespace

bool MapParams::non_degenerate() const {
  const double scale = scale_of(*this);
  if (!(scale > 0.0) || !std::isfinite(scale)) return false;
  return std::abs(gamma - alpha * beta) > kEpsSingular * scale;
}

MapParams conj(const MapParams& p) {
  return {std::conj(p.alpha), std::conj(p.beta), std::conj(p.gamma), p.d};
}

RationalMap::RationalMap(const MapParams& p) : p_(p) {
  if (p.d < 2) throw Error(ErrorKind::InvalidArgument, "degree d must be >= 2, got " + std::to_string(p.d));
  if (!p.non_degenerate()) throw Error(ErrorKind::DegenerateMap, "gamma - alpha*beta vanishes");
  const double d = p.d;
  quad_.c2 = d * p.beta;
  quad_.c1 = (d + 1.0) * p.gamma + (d - 1.0) * (p.alpha * p.beta);
  quad_.c0 = d * (p.alpha * p.gamma);
}

Complex RationalMap::operator()(Complex z) const {
  if (is_infinite(z)) return kInfinity;
  if (z == Complex{}) return z;
  const double nz = std::norm(z);
  if (!(nz <= kOverflowMagnitude * kOverflowMagnitude)) return kInfinity;

  const Complex den = p_.beta * z + p_.gamma;
  const double pole_scale = std::max(std::norm(p_.beta) * nz, std::norm(p_.gamma));
  if (std::norm(den) <= kEpsSingular * kEpsSingular * pole_scale) return kInfinity;

  const Complex w = ipow(z, p_.d) * (z + p_.alpha) / den;
  const double nw = std::norm(w);
  if (!(nw <= kOverflowMagnitude * kOverflowMagnitude)) return kInfinity;
  return w;
}

Complex RationalMap::derivative_or_infinity(Complex z) const {
  if (is_infinite(z)) return kInfinity;
  const Complex den = p_.beta * z + p_.gamma;
  const double pole_scale = std::max(std::norm(p_.beta) * std::norm(z), std::norm(p_.gamma));
  if (std::norm(den) <= kEpsSingular * kEpsSingular * pole_scale) return kInfinity;
  const Complex q = (quad_.c2 * z + quad_.c1) * z + quad_.c0;
  const Complex w = ipow(z, p_.d - 1) * q / (den * den);
  if (!(std::norm(w) <= kOverflowMagnitude * kOverflowMagnitude)) return kInfinity;
  return w;
}

Complex RationalMap::derivative(Complex z) const {
  if (is_infinite(z)) throw Error(ErrorKind::InvalidArgument, "derivative at infinity");
  const Complex den = p_.beta * z + p_.gamma;
  const double pole_scale = std::max(std::norm(p_.beta) * std::norm(z), std::norm(p_.gamma));
  if (std::norm(den) <= kEpsSingular * kEpsSingular * pole_scale)
    throw Error(ErrorKind::PoleEvaluation, "derivative evaluated at the pole -gamma/beta");
  const Complex q = (quad_.c2 * z + quad_.c1) * z + quad_.c0;
  return ipow(z, p_.d - 1) * q / (den * den);
}

Complex evaluate(const MapParams& p, Complex z) { return RationalMap(p)(z); }

Complex derivative(const MapParams& p, Complex z) { return RationalMap(p).derivative(z); }

std::pair<Complex, Complex> critical_points(const MapParams& p) {
  const RationalMap f(p);
  if (p.beta == Complex{}) throw Error(ErrorKind::BetaZero, "radical formula needs beta != 0");

  // Roots of c2 z^2 + c1 z + c0 with c2 = d*beta. The discriminant equals
  // (gamma - alpha beta)((d+1)^2 gamma - (d-1)^2 alpha beta).
  const auto& [c2, c1, c0] = f.derivative_quadratic();
  const double d = p.d;
  const Complex disc =
      (p.gamma - p.alpha * p.beta) * ((d + 1.0) * (d + 1.0) * p.gamma - (d - 1.0) * (d - 1.0) * (p.alpha * p.beta));
  const Complex s = std::sqrt(disc);

  // "+" root is -(c1 + s)/(2 c2). Evaluate the larger-magnitude numerator
  // directly and recover the other root from the product c0/c2.
  const Complex plus_num = c1 + s;
  const Complex minus_num = c1 - s;
  if (plus_num == Complex{} && minus_num == Complex{}) return {Complex{}, Complex{}};
  if (std::norm(plus_num) >= std::norm(minus_num)) {
    const Complex plus = -plus_num / (2.0 * c2);
    const Complex minus = -2.0 * c0 / plus_num;
    return {plus, minus};
  }
  const Complex minus = -minus_num / (2.0 * c2);
  const Complex plus = -2.0 * c0 / minus_num;
  return {plus, minus};
}

std::vector<Complex> free_critical_points(const MapParams& p) {
  if (p.beta != Complex{}) {
    auto [z1, z2] = critical_points(p);
    return {z1, z2};
  }
  RationalMap f(p);  // validates
  if (p.alpha == Complex{}) return {};
  const double d = p.d;
  return {-d * p.alpha / (d + 1.0)};
}

Complex cycle_multiplier(const MapParams& p, const std::vector<Complex>& points, double tol) {
  if (points.empty()) throw Error(ErrorKind::NotACycle, "empty point list");
  const RationalMap f(p);
  Complex mult{1.0, 0.0};
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex next = points[(i + 1) % n];
    const Complex image = f(points[i]);
    if (is_infinite(image) || is_infinite(next) ||
        std::abs(image - next) > tol * std::max(1.0, std::abs(next)))
      throw Error(ErrorKind::NotACycle, "f(points[" + std::to_string(i) + "]) does not return to the next point");
    mult *= f.derivative(points[i]);
  }
  return mult;
}

Cycle make_cycle(const MapParams& p, std::vector<Complex> points, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i] - points[j]) <= tol * std::max(1.0, std::abs(points[i])))
        throw Error(ErrorKind::NotACycle, "cycle points are not distinct");
  Cycle c;
  c.multiplier = cycle_multiplier(p, points, tol);
  c.points = std::move(points);
  return c;
}

}  // namespace ratslice
