#include "ratslice/slices.hpp"

#include <charconv>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

constexpr Complex kI{0.0, 1.0};

bool near(Complex s, Complex target) { return std::abs(s - target) < kEpsSliceSingular; }

[[noreturn]] void singular(std::string_view what, Complex s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, " at (%.17g, %.17g)", s.real(), s.imag());
  throw Error(ErrorKind::SingularParameter, std::string(what) + buf);
}

void check_degree(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "degree d must be >= 2");
}

// Guards shared by every slice built on the normalized family.
void check_normalized_b(Complex b, int d) {
  if (is_infinite(b)) singular("b = infinity", b);
  if (near(b, 0.0)) singular("b = 0 (degree drop)", b);
  if (near(b, 1.0)) singular("b = 1 (critical points collide)", b);
  if (near(b, static_cast<double>(d))) singular("b = d (free critical point at infinity)", b);
}

double wrap_unit(double x) {
  const double w = x - std::floor(x);
  return w >= 1.0 ? 0.0 : w;
}

}  // namespace

std::string_view to_string(SliceKind kind) {
  switch (kind) {
    case SliceKind::S1Zero: return "s1zero";
    case SliceKind::S2Zero: return "s2zero";
    case SliceKind::S1Lambda: return "s1lambda";
    case SliceKind::S2Lambda: return "s2lambda";
    case SliceKind::Blaschke: return "blaschke";
    case SliceKind::CubicPer1: return "cubic";
  }
  return "?";
}

std::string_view to_string(Sheet sheet) { return sheet == Sheet::Plus ? "plus" : "minus"; }
std::string_view to_string(View view) { return view == View::Raw ? "raw" : "cayley"; }

std::optional<SliceKind> parse_slice_kind(std::string_view text) {
  for (SliceKind k : {SliceKind::S1Zero, SliceKind::S2Zero, SliceKind::S1Lambda, SliceKind::S2Lambda,
                      SliceKind::Blaschke, SliceKind::CubicPer1})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::optional<Sheet> parse_sheet(std::string_view text) {
  if (text == "plus" || text == "+") return Sheet::Plus;
  if (text == "minus" || text == "-") return Sheet::Minus;
  return std::nullopt;
}

std::optional<View> parse_view(std::string_view text) {
  if (text == "raw") return View::Raw;
  if (text == "cayley") return View::Cayley;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// RotationNumber

RotationNumber RotationNumber::rational(long long p, long long q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "rotation number with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const long long g = std::gcd(p < 0 ? -p : p, q);
  RotationNumber r;
  r.rational_ = true;
  r.p_ = p / g;
  r.q_ = q / g;
  r.value_ = static_cast<double>(r.p_) / static_cast<double>(r.q_);
  return r;
}

RotationNumber RotationNumber::real(double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidArgument, "rotation number must be finite");
  RotationNumber r;
  r.rational_ = false;
  r.p_ = 0;
  r.q_ = 1;
  r.value_ = theta;
  return r;
}

RotationNumber RotationNumber::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorKind::InvalidArgument, "bad rotation number '" + std::string(text) + "'");
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::InvalidArgument, "bad rotation number '" + std::string(text) + "'");
  return real(v);
}

double RotationNumber::value() const { return value_; }

Complex RotationNumber::multiplier() const {
  if (!rational_) return std::polar(1.0, 2.0 * std::numbers::pi * value_);
  long long p = p_ % q_;
  if (p < 0) p += q_;
  if (p == 0) return {1.0, 0.0};
  if (4 * p == q_) return {0.0, 1.0};
  if (2 * p == q_) return {-1.0, 0.0};
  if (4 * p == 3 * q_) return {0.0, -1.0};
  // Reduce to the angle closest to zero for accuracy.
  const long long pp = 2 * p > q_ ? p - q_ : p;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(pp) / static_cast<double>(q_));
}

std::string RotationNumber::to_string() const {
  if (rational_) return std::to_string(p_) + "/" + std::to_string(q_);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

// ---------------------------------------------------------------------------

void validate(const SliceSpec& spec) {
  check_degree(spec.d);
  const Complex lambda = spec.multiplier();
  if (is_infinite(lambda)) throw Error(ErrorKind::InvalidArgument, "multiplier must be finite");
  if (!(spec.r_a > 0.0 && spec.r_a <= 1.0 && spec.r_b > 0.0 && spec.r_b <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "radii must lie in (0, 1]");
  if (spec.kind == SliceKind::S1Lambda && near(lambda, static_cast<double>(spec.d)))
    throw Error(ErrorKind::LambdaEqualsDegree, "lambda = d has no S1 parametrization");
  if (spec.view == View::Cayley && spec.kind == SliceKind::Blaschke)
    throw Error(ErrorKind::InvalidArgument, "the Cayley view does not apply to torus coordinates");
}

MapParams normalized_family(Complex a, Complex b, int d) {
  check_degree(d);
  if (a == Complex{} || b == Complex{})
    throw Error(ErrorKind::SingularParameter, "normalized family needs a != 0 and b != 0");
  const double dm1 = d - 1.0;
  const Complex ab = a * b;
  MapParams p;
  p.alpha = (1.0 - static_cast<double>(d) * b) / (b * dm1);
  p.beta = (static_cast<double>(d) - b) / (dm1 * ab);
  p.gamma = -1.0 / ab;
  p.d = d;
  if (!p.non_degenerate()) throw Error(ErrorKind::DegenerateMap, "normalized family degenerates (b = 1)");
  return p;
}

Complex normalized_free_critical_point(Complex b, int d) {
  const double dd = d;
  return (1.0 - dd * b) / (b * (b - dd));
}

MapParams s1_zero(Complex b, int d) {
  check_degree(d);
  check_normalized_b(b, d);
  return normalized_family({1.0, 0.0}, b, d);
}

Complex s2_zero_b(Complex a, int d) {
  check_degree(d);
  if (is_infinite(a)) singular("a = infinity", a);
  if (near(a, 0.0)) singular("a = 0", a);
  if (near(a, 1.0)) singular("a = 1 (0/0 puncture)", a);
  const Complex ad = ipow(a, d);
  const Complex ad1 = ad * a;
  // From f_{a,b}(a) = 1, using f_{a,b}(1) = a.
  const Complex num = 1.0 - ad1 + static_cast<double>(d) * (a - 1.0);
  const Complex den = a * (1.0 - ad1 - static_cast<double>(d) * (1.0 - a) * ad);
  const double scale = std::max({1.0, std::abs(ad1), std::abs(a)});
  if (std::abs(den) < kEpsSliceSingular * scale) singular("b(a) has a vanishing denominator (b = infinity)", a);
  return num / den;
}

MapParams s2_zero(Complex a, int d) {
  const Complex b = s2_zero_b(a, d);
  check_normalized_b(b, d);
  return normalized_family(a, b, d);
}

MapParams s1_lambda(Complex beta, Complex lambda, int d) {
  check_degree(d);
  const double dd = d;
  if (near(lambda, dd)) throw Error(ErrorKind::LambdaEqualsDegree, "lambda = d");
  if (is_infinite(beta)) singular("beta = infinity", beta);
  const Complex denom = dd - lambda;
  MapParams p;
  p.alpha = (-1.0 - dd + beta + lambda) / denom;
  p.gamma = (-1.0 + beta - dd * beta + beta * lambda) / denom;
  p.beta = beta;
  p.d = d;
  if (!p.non_degenerate()) throw Error(ErrorKind::DegenerateMap, "S1(lambda) member degenerates");
  return p;
}

S2LambdaSystem s2_lambda_system(Complex t, Complex lambda, int d) {
  check_degree(d);
  if (is_infinite(t)) throw Error(ErrorKind::DegenerateT, "t = infinity");
  if (near(t, 0.0)) throw Error(ErrorKind::DegenerateT, "t = 0 collides with the superattractor");
  if (near(t, 1.0)) throw Error(ErrorKind::DegenerateT, "t = 1 collapses the 2-cycle");
  const double dd = d;

  // f(1) = t and f(t) = 1 are linear in (beta, gamma):
  //   t beta + t gamma = 1 + alpha,   t beta + gamma = t^(d+1) + t^d alpha.
  // Eliminating gives gamma = -(1 + ... + t^d) - (1 + ... + t^(d-1)) alpha.
  Complex sum_d{0.0, 0.0};  // 1 + t + ... + t^(d-1)
  Complex tk{1.0, 0.0};
  for (int k = 0; k < d; ++k) {
    sum_d += tk;
    tk *= t;
  }
  const Complex td = tk;  // t^d
  const Complex td1 = td * t;
  const Complex tdm1 = td / t;

  S2LambdaSystem s;
  s.g1 = -sum_d;
  s.g0 = -(sum_d + td);
  s.b0 = (td1 - s.g0) / t;
  s.b1 = (td - s.g1) / t;

  // f'(1) = t L1(alpha)/(1 + alpha), f'(t) = L2(alpha)/(t^d (t + alpha)), with
  // L1, L2 affine in alpha; the multiplier condition is therefore quadratic.
  const Complex p0 = (dd + 1.0) - t * s.b0;
  const Complex p1 = dd - t * s.b1;
  const Complex q0 = (dd + 1.0) * td - s.b0;
  const Complex q1 = dd * tdm1 - s.b1;
  s.a2 = t * (p1 * q1) - lambda * td;
  s.a1 = t * (p0 * q1 + p1 * q0) - lambda * td * (1.0 + t);
  s.a0 = t * (p0 * q0) - lambda * td1;
  return s;
}

Complex s2_lambda_alpha(const S2LambdaSystem& sys, Sheet sheet) {
  const Complex root = std::sqrt(sys.a1 * sys.a1 - 4.0 * sys.a2 * sys.a0);
  const Complex s = sheet == Sheet::Plus ? root : -root;
  // alpha = (-A1 + s)/(2 A2) = 2 A0/(-A1 - s); use the form without cancellation.
  const Complex direct_num = -sys.a1 + s;
  const Complex alt_den = -sys.a1 - s;
  const double scale = std::max({std::abs(sys.a2), std::abs(sys.a1), std::abs(sys.a0)});
  if (!(scale > 0.0)) throw Error(ErrorKind::NoSolution, "quadratic vanishes identically");
  if (std::norm(alt_den) > std::norm(direct_num)) {
    if (std::abs(alt_den) <= kEpsSingular * scale) throw Error(ErrorKind::NoSolution, "no finite root on this sheet");
    return 2.0 * sys.a0 / alt_den;
  }
  if (std::abs(sys.a2) <= kEpsSingular * scale) throw Error(ErrorKind::NoSolution, "no finite root on this sheet");
  return direct_num / (2.0 * sys.a2);
}

MapParams s2_lambda(Complex t, Complex lambda, int d, Sheet sheet) {
  const S2LambdaSystem sys = s2_lambda_system(t, lambda, d);
  const Complex alpha = s2_lambda_alpha(sys, sheet);
  if (is_infinite(alpha)) throw Error(ErrorKind::NoSolution, "alpha is not finite");
  MapParams p;
  p.alpha = alpha;
  p.beta = sys.b0 + sys.b1 * alpha;
  p.gamma = sys.g0 + sys.g1 * alpha;
  p.d = d;
  if (!p.non_degenerate()) throw Error(ErrorKind::DegenerateMap, "S2(lambda) member degenerates");
  return p;
}

MapParams blaschke(double omega1, double omega2, double r_a, double r_b, int d) {
  check_degree(d);
  if (!(r_a > 0.0 && r_a <= 1.0 && r_b > 0.0 && r_b <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "radii must lie in (0, 1]");
  const double two_pi = 2.0 * std::numbers::pi;
  const Complex a = std::polar(r_a, two_pi * wrap_unit(omega1));
  const Complex b = std::polar(r_b, two_pi * wrap_unit(omega2));
  check_normalized_b(b, d);
  return normalized_family(a, b, d);
}

Complex cayley_view(Complex s) {
  if (is_infinite(s)) return {1.0, 0.0};
  if (s == -kI) throw Error(ErrorKind::PoleAtMinusI, "cayley_view(-i)");
  return (s - kI) / (s + kI);
}

Complex cayley_inverse(Complex c) {
  if (is_infinite(c)) return -kI;
  if (c == Complex{1.0, 0.0}) return kInfinity;
  return kI * (1.0 + c) / (1.0 - c);
}

std::pair<Complex, Complex> CubicMap::critical_points() const {
  // Roots of 3 z^2 + 2 b z + mu: (-b +/- sqrt(b^2 - 3 mu)) / 3.
  const Complex s = std::sqrt(b * b - 3.0 * mu);
  const Complex plus_num = -b + s;
  const Complex minus_num = -b - s;
  if (plus_num == Complex{} && minus_num == Complex{}) return {Complex{}, Complex{}};
  if (std::norm(plus_num) >= std::norm(minus_num)) {
    const Complex plus = plus_num / 3.0;
    return {plus, mu / plus_num};
  }
  const Complex minus = minus_num / 3.0;
  return {mu / minus_num, minus};
}

double CubicMap::escape_radius() const { return std::max(2.0, 2.0 * (1.0 + std::abs(mu) + std::abs(b))); }

CubicMap cubic_per1(Complex b, Complex mu) { return CubicMap{mu, b}; }

Complex raw_coordinate(const SlicePoint& pt) {
  return pt.spec.view == View::Cayley ? cayley_inverse(pt.s) : pt.s;
}

MapParams resolve(const SlicePoint& pt) {
  const SliceSpec& spec = pt.spec;
  validate(spec);
  const Complex s = raw_coordinate(pt);
  switch (spec.kind) {
    case SliceKind::S1Zero: return s1_zero(s, spec.d);
    case SliceKind::S2Zero: return s2_zero(s, spec.d);
    case SliceKind::S1Lambda: return s1_lambda(s, spec.multiplier(), spec.d);
    case SliceKind::S2Lambda: return s2_lambda(s, spec.multiplier(), spec.d, spec.sheet);
    case SliceKind::Blaschke: return blaschke(s.real(), s.imag(), spec.r_a, spec.r_b, spec.d);
    case SliceKind::CubicPer1:
      throw Error(ErrorKind::InvalidArgument, "cubic slices resolve to a CubicMap, not MapParams");
  }
  throw Error(ErrorKind::InvalidArgument, "unknown slice kind");
}

std::pair<Complex, Complex> critical_orbit_seeds(const MapParams& p) {
  if (p.beta != Complex{}) return critical_points(p);
  const auto finite = free_critical_points(p);
  if (finite.empty()) return {Complex{}, kInfinity};
  return {finite.front(), kInfinity};
}

ResolvedPoint resolve_with_critical_points(const SlicePoint& pt) {
  ResolvedPoint r;
  r.params = resolve(pt);
  switch (pt.spec.kind) {
    case SliceKind::S1Zero:
    case SliceKind::S2Zero:
    case SliceKind::Blaschke: {
      // z1 = 1 is marked; the product of the two finite critical points is
      // alpha*gamma/beta, which equals (1 - d b)/(b (b - d)).
      r.critical1 = {1.0, 0.0};
      r.critical2 = r.params.beta == Complex{} ? kInfinity : r.params.alpha * r.params.gamma / r.params.beta;
      break;
    }
    default: {
      auto [c1, c2] = critical_orbit_seeds(r.params);
      r.critical1 = c1;
      r.critical2 = c2;
    }
  }
  return r;
}

}  // namespace ratslice
