#pragma once

#include <string>
#include <vector>

#include "ratslice/run_config.hpp"

namespace ratslice {

/// One rendered panel of a registered figure. `config.out` holds only the file
/// name; the reproduce command places it under <out-dir>/<figure-id>/.
struct FigurePanel {
  std::string name;
  RunConfig config;
};

/// Desk-scale render recipe. Windows are hand-picked; panels default to
/// 512x512.
struct Figure {
  std::string id;
  std::string description;
  std::vector<FigurePanel> panels;
};

const std::vector<Figure>& figure_registry();
const Figure* find_figure(const std::string& id);

/// Inverse golden ratio (sqrt(5) - 1) / 2 at full double precision.
double inverse_golden_ratio();

}  // namespace ratslice
