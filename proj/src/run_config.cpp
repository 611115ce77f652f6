#include "ratslice/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorKind::InvalidArgument, "bad value '" + std::string(value) + "' for " + std::string(key));
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    bad_value(key, text);
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) bad_value(key, text);
  return v;
}

Complex parse_complex(std::string_view key, std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) bad_value(key, text);
  return {parse_double(key, text.substr(0, comma)), parse_double(key, text.substr(comma + 1))};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Slice: return "slice";
    case Command::Dynplane: return "dynplane";
    case Command::Cubic: return "cubic";
  }
  return "?";
}

void RunConfig::set(std::string_view key, std::string_view raw) {
  key = trim(key);
  const std::string_view value = trim(raw);
  if (key == "command") {
    if (value == "slice") command = Command::Slice;
    else if (value == "dynplane") command = Command::Dynplane;
    else if (value == "cubic") command = Command::Cubic;
    else bad_value(key, value);
  } else if (key == "kind") {
    auto k = parse_slice_kind(value);
    if (!k) bad_value(key, value);
    spec.kind = *k;
  } else if (key == "d") {
    spec.d = parse_int(key, value);
  } else if (key == "theta") {
    spec.theta = RotationNumber::parse(value);
    spec.lambda = {0.0, 0.0};
  } else if (key == "lambda") {
    spec.lambda = parse_complex(key, value);
    spec.theta.reset();
  } else if (key == "mu") {
    mu = parse_complex(key, value);
  } else if (key == "sheet") {
    auto s = parse_sheet(value);
    if (!s) bad_value(key, value);
    spec.sheet = *s;
  } else if (key == "radii") {
    const Complex r = parse_complex(key, value);
    spec.r_a = r.real();
    spec.r_b = r.imag();
  } else if (key == "view") {
    auto v = parse_view(value);
    if (!v) bad_value(key, value);
    spec.view = *v;
  } else if (key == "alpha") {
    alpha = parse_complex(key, value);
  } else if (key == "beta") {
    beta = parse_complex(key, value);
  } else if (key == "gamma") {
    gamma = parse_complex(key, value);
  } else if (key == "coord") {
    coord = parse_complex(key, value);
  } else if (key == "center") {
    center = parse_complex(key, value);
  } else if (key == "width") {
    width = parse_double(key, value);
  } else if (key == "px") {
    px = parse_int(key, value);
  } else if (key == "py") {
    py = parse_int(key, value);
  } else if (key == "max_iter") {
    classifier.max_iter = parse_int(key, value);
  } else if (key == "escape_magnitude") {
    classifier.escape_magnitude = parse_double(key, value);
  } else if (key == "eps_cycle") {
    classifier.eps_cycle = parse_double(key, value);
  } else if (key == "eps_attract") {
    classifier.eps_attract = parse_double(key, value);
  } else if (key == "max_period") {
    classifier.max_period = parse_int(key, value);
  } else if (key == "palette") {
    palette = std::string(value);
  } else if (key == "out") {
    out = std::string(value);
  } else if (key == "csv") {
    csv = std::string(value);
  } else if (key == "threads") {
    threads = parse_int(key, value);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown config key '" + std::string(key) + "'");
  }
}

RunConfig parse_run_config(std::string_view text) {
  RunConfig c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidArgument, "config line " + std::to_string(line_no) + " is not key=value");
    c.set(line.substr(0, eq), line.substr(eq + 1));
  }
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string render_run_config(const RunConfig& c) {
  std::ostringstream o;
  o << "command=" << to_string(c.command) << '\n';
  o << "kind=" << to_string(c.spec.kind) << '\n';
  o << "d=" << c.spec.d << '\n';
  if (c.spec.theta)
    o << "theta=" << c.spec.theta->to_string() << '\n';
  else
    o << "lambda=" << fmt(c.spec.lambda) << '\n';
  o << "mu=" << fmt(c.mu) << '\n';
  o << "sheet=" << to_string(c.spec.sheet) << '\n';
  o << "radii=" << fmt(c.spec.r_a) << ',' << fmt(c.spec.r_b) << '\n';
  o << "view=" << to_string(c.spec.view) << '\n';
  if (c.alpha) o << "alpha=" << fmt(*c.alpha) << '\n';
  if (c.beta) o << "beta=" << fmt(*c.beta) << '\n';
  if (c.gamma) o << "gamma=" << fmt(*c.gamma) << '\n';
  if (c.coord) o << "coord=" << fmt(*c.coord) << '\n';
  if (c.center) o << "center=" << fmt(*c.center) << '\n';
  if (c.width) o << "width=" << fmt(*c.width) << '\n';
  o << "px=" << c.px << '\n';
  o << "py=" << c.py << '\n';
  o << "max_iter=" << c.classifier.max_iter << '\n';
  o << "escape_magnitude=" << fmt(c.classifier.escape_magnitude) << '\n';
  o << "eps_cycle=" << fmt(c.classifier.eps_cycle) << '\n';
  o << "eps_attract=" << fmt(c.classifier.eps_attract) << '\n';
  o << "max_period=" << c.classifier.max_period << '\n';
  o << "palette=" << c.palette << '\n';
  o << "out=" << c.out << '\n';
  if (!c.csv.empty()) o << "csv=" << c.csv << '\n';
  o << "threads=" << c.threads << '\n';
  return o.str();
}

void save_run_config(const RunConfig& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << render_run_config(c);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

MapParams dynplane_map(const RunConfig& c) {
  const bool raw = c.alpha || c.beta || c.gamma;
  if (raw && c.coord)
    throw Error(ErrorKind::InvalidArgument, "give either alpha/beta/gamma or a slice coordinate, not both");
  if (raw) {
    MapParams p;
    p.alpha = c.alpha.value_or(Complex{});
    p.beta = c.beta.value_or(Complex{});
    p.gamma = c.gamma.value_or(Complex{1.0, 0.0});
    p.d = c.spec.d;
    RationalMap check(p);
    return p;
  }
  if (!c.coord) throw Error(ErrorKind::InvalidArgument, "dynamical plane needs alpha/beta/gamma or coord");
  if (c.spec.kind == SliceKind::CubicPer1)
    throw Error(ErrorKind::InvalidArgument, "cubic dynamical planes are not supported");
  return resolve(SlicePoint{c.spec, *c.coord});
}

Viewport effective_viewport(const RunConfig& c) {
  Viewport vp;
  vp.pixels_x = c.px;
  vp.pixels_y = c.py;
  if (c.command == Command::Dynplane && !(c.center && c.width)) {
    const Viewport def = default_dynplane_viewport(dynplane_map(c), c.px, c.py);
    vp.center = def.center;
    vp.width = def.width;
  } else if (c.command == Command::Slice && c.spec.kind == SliceKind::Blaschke) {
    vp.center = {0.5, 0.5};
    vp.width = 1.0;
  } else {
    vp.center = {0.0, 0.0};
    vp.width = 4.0;
  }
  if (c.center) vp.center = *c.center;
  if (c.width) vp.width = *c.width;
  vp.validate();
  return vp;
}

RunConfig effective_config(const RunConfig& c) {
  RunConfig e = c;
  const Viewport vp = effective_viewport(c);
  e.center = vp.center;
  e.width = vp.width;
  return e;
}

}  // namespace ratslice
