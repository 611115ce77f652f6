#include "ratslice/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

constexpr double kZeroFloor = 1e-12;
constexpr int kNewtonSteps = 40;
constexpr int kTailLength = 256;
constexpr double kTailRadius = 0.1;

Complex orbit_power(const auto& f, Complex w, int k, Complex& deriv) {
  deriv = {1.0, 0.0};
  for (int i = 0; i < k; ++i) {
    deriv *= f.derivative_or_infinity(w);
    w = f(w);
    if (is_infinite(w) || is_infinite(deriv)) return kInfinity;
  }
  return w;
}

bool closes(Complex image, Complex w, double tol) {
  return !is_infinite(image) && std::abs(image - w) <= tol * std::max(1.0, std::abs(w));
}

// Confirms a near-return of length k seen at z. Returns nullopt for spurious
// returns (Newton diverges onto something else, or the cycle is repelling).
template <class Map>
std::optional<OrbitVerdict> confirm_cycle(const Map& f, Complex z, int k, const ClassifierConfig& cfg,
                                          std::optional<Complex> marked) {
  Complex deriv;
  Complex w = z;
  for (int n = 0; n < kNewtonSteps; ++n) {
    const Complex fk = orbit_power(f, w, k, deriv);
    if (is_infinite(fk)) break;
    const Complex g = fk - w;
    const Complex dg = deriv - 1.0;
    if (std::abs(g) <= 1e-15 * std::max(1.0, std::abs(w)) || dg == Complex{}) break;
    const Complex step = g / dg;
    if (is_infinite(step)) break;
    w -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(w))) break;
  }
  // Newton may stall (parabolic cycles) or wander off; fall back to the raw point.
  const double near_tol = std::max(1e-6, std::sqrt(cfg.eps_cycle)) * std::max(1.0, std::abs(z));
  if (is_infinite(w) || std::abs(w - z) > near_tol || !closes(orbit_power(f, w, k, deriv), w, cfg.eps_cycle))
    w = z;
  if (!closes(orbit_power(f, w, k, deriv), w, cfg.eps_cycle)) return std::nullopt;

  int period = k;
  for (int p = 1; p < k; ++p) {
    if (k % p != 0) continue;
    if (closes(orbit_power(f, w, p, deriv), w, cfg.eps_cycle)) {
      period = p;
      break;
    }
  }

  Complex mult{1.0, 0.0};
  bool marked_hit = false;
  Complex u = w;
  for (int i = 0; i < period; ++i) {
    if (marked && std::abs(u - *marked) <= cfg.eps_attract) marked_hit = true;
    mult *= f.derivative_or_infinity(u);
    u = f(u);
  }
  if (is_infinite(mult) || std::abs(mult) > 1.0 + cfg.eps_attract) return std::nullopt;

  OrbitVerdict v;
  v.label = marked_hit ? OrbitLabel::MarkedCycle : OrbitLabel::OtherCycle;
  v.period = period;
  v.multiplier_estimate = mult;
  v.cycle_point = w;
  return v;
}

// Orbits drawn into a parabolic marked cycle converge algebraically and never
// produce a return below eps_cycle. When max_iter runs out inside A, the last
// kTailLength iterates are tested against the cycle through the marked point
// (period q): the distance must end below kTailRadius and shrink at every step
// of some stride that is a multiple of q.
template <class Map>
std::optional<OrbitVerdict> marked_tail(const Map& f, const std::vector<Complex>& tail, int head,
                                        const ClassifierConfig& cfg, Complex marked) {
  std::vector<Complex> cycle{marked};
  Complex u = f(marked);
  while (!closes(u, marked, cfg.eps_cycle)) {
    if (is_infinite(u) || static_cast<int>(cycle.size()) >= cfg.max_period) return std::nullopt;
    cycle.push_back(u);
    u = f(u);
  }
  Complex mult{1.0, 0.0};
  for (Complex c : cycle) mult *= f.derivative_or_infinity(c);
  if (is_infinite(mult) || std::abs(mult) > 1.0 + cfg.eps_attract) return std::nullopt;

  const int n = static_cast<int>(tail.size());
  const int q = static_cast<int>(cycle.size());
  if (n < 4 * q) return std::nullopt;
  auto dist = [&](int back) {  // distance to the cycle of the iterate `back` steps before the last
    const Complex z = tail[static_cast<std::size_t>(((head - 1 - back) % n + n) % n)];
    double best = std::numeric_limits<double>::infinity();
    for (Complex c : cycle) best = std::min(best, std::abs(z - c) / std::max(1.0, std::abs(c)));
    return best;
  };
  if (!(dist(0) < kTailRadius)) return std::nullopt;
  // A parabolic cycle of rotation p/r is approached petal by petal, so the
  // distance is monotone only along strides of r * q.
  auto shrinking = [&](int stride) {
    double later = dist(0);
    for (int back = stride; back + stride <= n; back += stride) {
      const double earlier = dist(back);
      if (!(later < earlier)) return false;
      later = earlier;
    }
    return true;
  };
  bool found = false;
  for (int stride = q; stride <= cfg.max_period && 4 * stride <= n && !found; stride += q) found = shrinking(stride);
  if (!found) return std::nullopt;
  OrbitVerdict v;
  v.label = OrbitLabel::MarkedCycle;
  v.period = q;
  v.multiplier_estimate = mult;
  v.cycle_point = marked;
  return v;
}

// Escape predicate returns the decided label or nullopt; `exhausted` gives the
// label when max_iter runs out at z.
template <class Map, class Escape, class Exhausted>
OrbitVerdict run_orbit(const Map& f, Complex z0, const ClassifierConfig& cfg, std::optional<Complex> marked,
                       Escape escape, Exhausted exhausted) {
  const double eps2 = cfg.eps_cycle * cfg.eps_cycle;
  Complex z = z0;
  Complex saved = z;
  int window = 1;
  int since = 0;
  std::vector<Complex> tail;
  int head = 0;
  if (marked) tail.reserve(kTailLength);
  for (int it = 0;; ++it) {
    if (auto label = escape(z)) {
      OrbitVerdict v;
      v.label = *label;
      v.iterations_used = it;
      return v;
    }
    if (marked) {
      if (static_cast<int>(tail.size()) < kTailLength) tail.push_back(z);
      else tail[static_cast<std::size_t>(head)] = z;
      head = (head + 1) % kTailLength;
    }
    if (it == cfg.max_iter) {
      OrbitVerdict v;
      v.label = exhausted(z);
      v.iterations_used = it;
      if (v.label == OrbitLabel::BoundedUndecided && marked) {
        if (auto m = marked_tail(f, tail, head, cfg, *marked)) {
          m->iterations_used = it;
          return *m;
        }
      }
      return v;
    }
    z = f(z);
    ++since;
    if (!is_infinite(z) && std::norm(z - saved) < eps2 * std::max(1.0, std::norm(saved))) {
      if (auto v = confirm_cycle(f, z, since, cfg, marked)) {
        v->iterations_used = it + 1;
        return *v;
      }
    }
    if (since >= window) {
      saved = z;
      since = 0;
      window = std::min(2 * window, cfg.max_period);
    }
  }
}

OrbitVerdict singular_verdict() {
  OrbitVerdict v;
  v.label = OrbitLabel::Singular;
  return v;
}

// Unit-radius Blaschke members preserve the unit circle and both critical
// points lie on it, so their orbits are followed on the circle: each iterate is
// projected back to |z| = 1 to keep rounding from pushing it off.
struct CircleMap {
  const RationalMap& f;
  Complex operator()(Complex z) const {
    const Complex w = f(z);
    if (is_infinite(w) || w == Complex{}) return w;
    return w / std::sqrt(std::norm(w));
  }
  Complex derivative_or_infinity(Complex z) const { return f.derivative_or_infinity(z); }
};

OrbitVerdict classify_circle_orbit(const RationalMap& f, Complex z0, const ClassifierConfig& cfg) {
  auto escape = [](Complex z) -> std::optional<OrbitLabel> {
    if (is_infinite(z)) return OrbitLabel::EscapeInf;
    if (z == Complex{}) return OrbitLabel::EscapeZero;
    return std::nullopt;
  };
  auto exhausted = [](Complex) { return OrbitLabel::BoundedUndecided; };
  return run_orbit(CircleMap{f}, z0 / std::abs(z0), cfg, kMarkedPoint, escape, exhausted);
}

bool on_unit_circle(const RationalMap& f, const OrbitVerdict& v, double tol) {
  if (!v.cycle_point || !v.period) return false;
  Complex u = *v.cycle_point;
  for (int i = 0; i < *v.period; ++i) {
    if (std::abs(std::abs(u) - 1.0) > tol) return false;
    u = f(u);
  }
  return true;
}

}  // namespace

std::string_view token(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::EscapeZero: return "ESC0";
    case OrbitLabel::EscapeInf: return "ESCINF";
    case OrbitLabel::MarkedCycle: return "MARKED";
    case OrbitLabel::OtherCycle: return "OTHER";
    case OrbitLabel::BoundedUndecided: return "UNDEC";
    case OrbitLabel::Singular: return "SING";
  }
  return "?";
}

std::optional<OrbitLabel> parse_token(std::string_view text) {
  for (OrbitLabel l : {OrbitLabel::EscapeZero, OrbitLabel::EscapeInf, OrbitLabel::MarkedCycle,
                       OrbitLabel::OtherCycle, OrbitLabel::BoundedUndecided, OrbitLabel::Singular})
    if (token(l) == text) return l;
  return std::nullopt;
}

void ClassifierConfig::validate() const {
  if (max_iter <= 0 || max_period <= 0 || !(escape_magnitude > 0.0) || !(eps_cycle > 0.0) ||
      !(eps_attract > 0.0))
    throw Error(ErrorKind::InvalidArgument, "classifier settings must be positive");
  if (max_iter < 4 * max_period) throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 4 * max_period");
}

TrappingRegion trapping_region(const MapParams& p) {
  if (!p.non_degenerate()) throw Error(ErrorKind::DegenerateMap, "trapping region of a degenerate map");
  if (p.d < 2) throw Error(ErrorKind::InvalidArgument, "degree d must be >= 2");
  const double a = std::abs(p.alpha);
  const double b = std::abs(p.beta);
  const double g = std::abs(p.gamma);
  const double e = 1.0 / (p.d - 1.0);
  const double root_d = 1.0 / p.d;

  std::vector<double> inner_terms;
  std::vector<double> outer_terms;
  if (a > 0.0) {
    inner_terms.push_back(a / 2.0);
    inner_terms.push_back(std::pow(g / (3.0 * a), e));
    outer_terms.push_back(2.0 * a);
  } else {
    inner_terms.push_back(std::pow(g / 2.0, root_d));
  }
  if (b > 0.0) {
    inner_terms.push_back(g / (2.0 * b));
    outer_terms.push_back(2.0 * g / b);
    outer_terms.push_back(std::pow(3.0 * b, e));
  } else {
    outer_terms.push_back(std::pow(2.0 * g, root_d));
  }

  TrappingRegion r;
  r.inner = *std::min_element(inner_terms.begin(), inner_terms.end());
  r.outer = *std::max_element(outer_terms.begin(), outer_terms.end());
  if (r.inner > r.outer) {
    std::swap(r.inner, r.outer);
    r.widened = true;
  }
  return r;
}

OrbitVerdict classify_orbit(const RationalMap& f, Complex z0, const TrappingRegion& region,
                            const ClassifierConfig& cfg) {
  const double inner = region.inner;
  const double outer = region.outer;
  const double zero_confirm = std::max(inner * inner / outer, kZeroFloor);
  // Squared radii: the loop compares |z|^2 and skips a hypot per step.
  const double esc2 = std::pow(std::max(outer, cfg.escape_magnitude), 2);
  const double zero2 = std::pow(std::min(inner, zero_confirm), 2);
  auto escape = [&](Complex z) -> std::optional<OrbitLabel> {
    if (is_infinite(z)) return OrbitLabel::EscapeInf;
    const double r2 = std::norm(z);
    if (r2 > esc2) return OrbitLabel::EscapeInf;
    if (r2 < zero2) return OrbitLabel::EscapeZero;
    return std::nullopt;
  };
  auto exhausted = [&](Complex z) {
    const double r = std::abs(z);
    if (r > outer) return OrbitLabel::EscapeInf;
    if (r < inner) return OrbitLabel::EscapeZero;
    return OrbitLabel::BoundedUndecided;
  };
  return run_orbit(f, z0, cfg, kMarkedPoint, escape, exhausted);
}

OrbitVerdict classify_orbit(const MapParams& p, Complex z0, const TrappingRegion& region,
                            const ClassifierConfig& cfg) {
  return classify_orbit(RationalMap(p), z0, region, cfg);
}

PixelClass classify_parameter(const SlicePoint& pt, const ClassifierConfig& cfg) {
  if (pt.spec.kind == SliceKind::CubicPer1) {
    Complex b;
    try {
      validate(pt.spec);
      b = raw_coordinate(pt);
    } catch (const Error&) {
      b = kInfinity;
    }
    if (is_infinite(b)) return {singular_verdict(), singular_verdict(), false};
    return classify_cubic_parameter(b, pt.spec.multiplier(), cfg);
  }

  ResolvedPoint r;
  try {
    r = resolve_with_critical_points(pt);
  } catch (const Error&) {
    return {singular_verdict(), singular_verdict(), false};
  }
  const RationalMap f(r.params);
  PixelClass px;
  if (pt.spec.kind == SliceKind::Blaschke && pt.spec.r_a == 1.0 && pt.spec.r_b == 1.0) {
    px.orbit1 = classify_circle_orbit(f, r.critical1, cfg);
    px.orbit2 = classify_circle_orbit(f, r.critical2, cfg);
    px.orbit1.resonant = on_unit_circle(f, px.orbit1, cfg.eps_attract);
    px.orbit2.resonant = on_unit_circle(f, px.orbit2, cfg.eps_attract);
  } else {
    const TrappingRegion region = trapping_region(r.params);
    px.orbit1 = classify_orbit(f, r.critical1, region, cfg);
    px.orbit2 = classify_orbit(f, r.critical2, region, cfg);
  }
  px.in_connectedness_locus = in_locus(px.orbit1, px.orbit2);
  return px;
}

OrbitVerdict classify_cubic_orbit(const CubicMap& P, Complex z0, const ClassifierConfig& cfg) {
  const double radius2 = P.escape_radius() * P.escape_radius();
  auto escape = [&](Complex z) -> std::optional<OrbitLabel> {
    if (is_infinite(z) || std::norm(z) > radius2) return OrbitLabel::EscapeInf;
    return std::nullopt;
  };
  auto exhausted = [](Complex) { return OrbitLabel::BoundedUndecided; };
  return run_orbit(P, z0, cfg, std::nullopt, escape, exhausted);
}

PixelClass classify_cubic_parameter(Complex b, Complex mu, const ClassifierConfig& cfg) {
  const CubicMap P = cubic_per1(b, mu);
  const auto [c1, c2] = P.critical_points();
  PixelClass px;
  px.orbit1 = classify_cubic_orbit(P, c1, cfg);
  px.orbit2 = classify_cubic_orbit(P, c2, cfg);
  px.in_connectedness_locus = in_locus(px.orbit1, px.orbit2);
  return px;
}

}  // namespace ratslice
