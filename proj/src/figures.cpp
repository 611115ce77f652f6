#include "ratslice/figures.hpp"

#include <cmath>

namespace ratslice {

namespace {

RunConfig slice(SliceKind kind, int d, Complex center, double width) {
  RunConfig c;
  c.command = Command::Slice;
  c.spec.kind = kind;
  c.spec.d = d;
  c.center = center;
  c.width = width;
  return c;
}

RunConfig with_theta(RunConfig c, RotationNumber theta) {
  c.spec.theta = theta;
  c.spec.lambda = {0.0, 0.0};
  return c;
}

RunConfig cubic(Complex mu, Complex center, double width) {
  RunConfig c;
  c.command = Command::Cubic;
  c.spec.kind = SliceKind::CubicPer1;
  c.mu = mu;
  c.center = center;
  c.width = width;
  return c;
}

FigurePanel panel(std::string name, RunConfig c) {
  c.out = name + ".png";
  return {std::move(name), std::move(c)};
}

std::vector<Figure> build_registry() {
  std::vector<Figure> figs;

  {
    RunConfig large_d = slice(SliceKind::S1Zero, 8, {0.0, 0.0}, 2.6);
    large_d.spec.view = View::Cayley;
    figs.push_back({"fig2-s1zero-large-d",
                    "S1(0) for d = 8 in the Cayley coordinate (b - i)/(b + i), beside the cubic slice Per1(0)",
                    {panel("s1zero-d8-cayley", large_d), panel("cubic-per1-0", cubic({0.0, 0.0}, {0.0, 0.0}, 6.0))}});
  }
  {
    RunConfig cay = slice(SliceKind::S2Zero, 3, {0.0, 0.0}, 2.6);
    cay.spec.view = View::Cayley;
    figs.push_back({"fig3-s2zero-d3",
                    "S2(0), d = 3, in the a-plane and in the Cayley coordinate (a - i)/(a + i)",
                    {panel("s2zero-d3-a-plane", slice(SliceKind::S2Zero, 3, {0.0, 0.0}, 6.0)),
                     panel("s2zero-d3-cayley", cay)}});
  }
  {
    const RunConfig base = slice(SliceKind::S1Lambda, 3, {0.0, 0.0}, 16.0);
    figs.push_back({"fig6-s1-parabolic",
                    "S1(lambda), d = 3, for lambda = -1, lambda = 1 and theta = 1/180",
                    {panel("s1-theta-1_2", with_theta(base, RotationNumber::rational(1, 2))),
                     panel("s1-theta-0", with_theta(base, RotationNumber::rational(0, 1))),
                     panel("s1-theta-1_180", with_theta(base, RotationNumber::rational(1, 180)))}});
  }
  {
    const RunConfig base = slice(SliceKind::S1Lambda, 3, {0.0, 0.0}, 16.0);
    figs.push_back({"fig7-golden-s1",
                    "S1(lambda), d = 3, theta = (sqrt(5) - 1)/2",
                    {panel("s1-golden", with_theta(base, RotationNumber::real(inverse_golden_ratio())))}});
  }
  {
    const RunConfig base = slice(SliceKind::S2Lambda, 3, {0.0, 0.0}, 6.0);
    figs.push_back({"fig8-gallery-s2",
                    "S2(lambda), d = 3, theta = 1/2, 1/3, 1/11, 1/79 (plus sheet)",
                    {panel("s2-theta-1_2", with_theta(base, RotationNumber::rational(1, 2))),
                     panel("s2-theta-1_3", with_theta(base, RotationNumber::rational(1, 3))),
                     panel("s2-theta-1_11", with_theta(base, RotationNumber::rational(1, 11))),
                     panel("s2-theta-1_79", with_theta(base, RotationNumber::rational(1, 79)))}});
  }
  {
    figs.push_back({"fig10-blaschke-torus",
                    "Blaschke slice |a| = |b| = 1, d = 3, on the torus (omega1, omega2)",
                    {panel("blaschke-d3", slice(SliceKind::Blaschke, 3, {0.5, 0.5}, 1.0))}});
  }
  {
    RunConfig island = slice(SliceKind::Blaschke, 3, {0.5, 0.5}, 1.0);
    island.spec.r_a = 0.97;
    island.spec.r_b = 0.97;
    figs.push_back({"fig12-island",
                    "Interior radii |a| = |b| = 0.97, d = 3, on the torus (omega1, omega2)",
                    {panel("island-r0.97", island)}});
  }
  {
    figs.push_back({"fig-cubic-compare",
                    "Cubic comparison slices P(z) = mu z + b z^2 + z^3 in the b-plane for mu = 0 and mu = -1",
                    {panel("cubic-mu0", cubic({0.0, 0.0}, {0.0, 0.0}, 6.0)),
                     panel("cubic-mu-1", cubic({-1.0, 0.0}, {0.0, 0.0}, 6.0))}});
  }
  return figs;
}

}  // namespace

double inverse_golden_ratio() { return (std::sqrt(5.0) - 1.0) / 2.0; }

const std::vector<Figure>& figure_registry() {
  static const std::vector<Figure> registry = build_registry();
  return registry;
}

const Figure* find_figure(const std::string& id) {
  for (const Figure& f : figure_registry())
    if (f.id == id) return &f;
  return nullptr;
}

}  // namespace ratslice
