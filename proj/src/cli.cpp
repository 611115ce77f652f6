#include "ratslice/cli.hpp"

#include <CLI11.hpp>

#include <deque>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ratslice/csv_io.hpp"
#include "ratslice/error.hpp"
#include "ratslice/figures.hpp"
#include "ratslice/image_io.hpp"
#include "ratslice/palette.hpp"
#include "ratslice/raster.hpp"

namespace ratslice {

namespace {

namespace fs = std::filesystem;

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::IoError ? kExitIo : kExitUsage; }

// String-valued flags that map one-to-one onto RunConfig keys; applied after
// any --config file so that flags take precedence.
struct FlagSet {
  std::deque<std::pair<std::string, std::string>> values;  // key, raw value; CLI11 keeps pointers
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::string config_path;

  void add(CLI::App& app, const std::string& flag, const std::string& key, const std::string& help) {
    values.emplace_back(key, std::string{});
    options.emplace_back(key, app.add_option(flag, values.back().second, help)->allow_extra_args(false));
  }

  RunConfig build(Command command) const {
    RunConfig c;
    if (!config_path.empty()) c = load_run_config(config_path);
    c.command = command;
    for (std::size_t k = 0; k < options.size(); ++k)
      if (options[k].second->count() > 0) c.set(values[k].first, values[k].second);
    return c;
  }
};

void add_common_flags(CLI::App& app, FlagSet& flags) {
  app.add_option("--config", flags.config_path, "key=value config file (flags override it)");
  flags.add(app, "--kind", "kind", "s1zero|s2zero|s1lambda|s2lambda|blaschke|cubic");
  flags.add(app, "--d", "d", "degree parameter d >= 2");
  flags.add(app, "--theta", "theta", "rotation number p/q or decimal; lambda = exp(2 pi i theta)");
  flags.add(app, "--lambda", "lambda", "explicit multiplier re,im");
  flags.add(app, "--sheet", "sheet", "plus|minus (s2lambda)");
  flags.add(app, "--radii", "radii", "r_a,r_b in (0,1] (blaschke)");
  flags.add(app, "--view", "view", "raw|cayley");
  flags.add(app, "--center", "center", "viewport center re,im");
  flags.add(app, "--width", "width", "viewport width");
  flags.add(app, "--px", "px", "pixels across");
  flags.add(app, "--py", "py", "pixels down");
  flags.add(app, "--max-iter", "max_iter", "iteration cap (default 4000)");
  flags.add(app, "--escape-magnitude", "escape_magnitude", "escape confirmation radius");
  flags.add(app, "--eps-cycle", "eps_cycle", "cycle return tolerance");
  flags.add(app, "--eps-attract", "eps_attract", "marked-point and multiplier tolerance");
  flags.add(app, "--max-period", "max_period", "longest detected period");
  flags.add(app, "--out", "out", "output image (.png or .ppm)");
  flags.add(app, "--csv", "csv", "optional CSV export");
  flags.add(app, "--palette", "palette", "classic|mono|basins");
  flags.add(app, "--threads", "threads", "worker cap (0 = all cores)");
}

void print_summary(std::ostream& out, const GridResult& g, const std::string& path) {
  out << "cells=" << g.cells.size() << " undecided=" << std::fixed << std::setprecision(4)
      << g.undecided_fraction() << " seconds=" << std::setprecision(3) << g.seconds << " out=" << path << '\n';
  out.unsetf(std::ios::fixed);
}

}  // namespace

int execute_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunConfig eff;
  Viewport vp;
  std::optional<Palette> palette;
  MapParams map;
  try {
    if (config.out.empty()) {
      err << "error: --out is required\n";
      return kExitUsage;
    }
    image_format_for(config.out);
    palette = Palette::preset(config.palette);
    if (!palette) {
      err << "error: unknown palette '" << config.palette << "'\n";
      return kExitUsage;
    }
    config.classifier.validate();
    if (config.command == Command::Slice) validate(config.spec);
    if (config.command == Command::Dynplane) map = dynplane_map(config);
    eff = effective_config(config);
    vp = effective_viewport(eff);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  GridResult g;
  try {
    switch (config.command) {
      case Command::Slice: g = render_slice(eff.spec, vp, eff.classifier, eff.threads); break;
      case Command::Dynplane: g = render_dynplane(map, vp, eff.classifier, eff.threads); break;
      case Command::Cubic: g = render_cubic_slice(eff.mu, vp, eff.classifier, eff.threads); break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  try {
    encode_image(g, *palette, eff.out);
    if (!eff.csv.empty()) export_csv(g, eff.csv);
    save_run_config(eff, eff.out + ".cfg");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  print_summary(out, g, eff.out);
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameter slices of z^d (z + alpha)/(beta z + gamma): connectedness loci and basins", "ratslice"};
  app.require_subcommand(1);

  FlagSet slice_flags;
  CLI::App* slice_cmd = app.add_subcommand("slice", "render a parameter slice");
  add_common_flags(*slice_cmd, slice_flags);

  FlagSet dyn_flags;
  CLI::App* dyn_cmd = app.add_subcommand("dynplane", "render a dynamical plane");
  add_common_flags(*dyn_cmd, dyn_flags);
  dyn_flags.add(*dyn_cmd, "--alpha", "alpha", "alpha re,im");
  dyn_flags.add(*dyn_cmd, "--beta", "beta", "beta re,im");
  dyn_flags.add(*dyn_cmd, "--gamma", "gamma", "gamma re,im");
  dyn_flags.add(*dyn_cmd, "--coord", "coord", "slice coordinate re,im (with --kind)");

  FlagSet cubic_flags;
  CLI::App* cubic_cmd = app.add_subcommand("cubic", "render the cubic comparison slice in b");
  add_common_flags(*cubic_cmd, cubic_flags);
  cubic_flags.add(*cubic_cmd, "--mu", "mu", "multiplier mu re,im of the fixed point 0");

  std::string figure_id;
  std::string out_dir = "out";
  int fig_px = 0;
  int fig_py = 0;
  int fig_threads = 0;
  CLI::App* repro_cmd = app.add_subcommand("reproduce", "render a registered figure at desk scale");
  repro_cmd->add_option("figure", figure_id, "figure id (see `ratslice figures`)")->required();
  repro_cmd->add_option("--out-dir", out_dir, "output root (default: out)");
  repro_cmd->add_option("--px", fig_px, "override pixels across");
  repro_cmd->add_option("--py", fig_py, "override pixels down");
  repro_cmd->add_option("--threads", fig_threads, "worker cap");

  std::string run_config_path;
  CLI::App* run_cmd = app.add_subcommand("run", "re-run a saved config or provenance sidecar");
  run_cmd->add_option("--config", run_config_path, "config file")->required();
  std::string run_out;
  run_cmd->add_option("--out", run_out, "write the image here instead of the stored path");

  CLI::App* list_cmd = app.add_subcommand("figures", "list registered figures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (slice_cmd->parsed()) return execute_run(slice_flags.build(Command::Slice), out, err);
    if (dyn_cmd->parsed()) return execute_run(dyn_flags.build(Command::Dynplane), out, err);
    if (cubic_cmd->parsed()) return execute_run(cubic_flags.build(Command::Cubic), out, err);
    if (run_cmd->parsed()) {
      RunConfig c = load_run_config(run_config_path);
      if (!run_out.empty()) c.out = run_out;
      return execute_run(c, out, err);
    }
    if (list_cmd->parsed()) {
      for (const Figure& f : figure_registry()) out << f.id << "  " << f.description << '\n';
      return kExitOk;
    }
    if (repro_cmd->parsed()) {
      const Figure* fig = find_figure(figure_id);
      if (!fig) {
        err << "error: unknown figure '" << figure_id << "'\n";
        return kExitUsage;
      }
      const fs::path dir = fs::path(out_dir) / fig->id;
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) {
        err << "error: cannot create " << dir.string() << ": " << ec.message() << '\n';
        return kExitIo;
      }
      for (const FigurePanel& panel : fig->panels) {
        RunConfig c = panel.config;
        c.out = (dir / panel.config.out).string();
        if (fig_px > 0) c.px = fig_px;
        if (fig_py > 0) c.py = fig_py;
        c.threads = fig_threads;
        if (const int rc = execute_run(c, out, err); rc != kExitOk) return rc;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace ratslice
