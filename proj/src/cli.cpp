#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/report.hpp"

namespace casimir::cli {

namespace {

namespace fs = std::filesystem;

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

struct Loaded {
  io::RunConfig config;
  fs::path base_dir;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.config = io::parse_config_file(path);
  l.base_dir = fs::path(path).parent_path();
  return l;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  return f;
}

fs::path series_path(const fs::path& base, io::SeriesAxis axis, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", value);
  const std::string tag = std::string(axis == io::SeriesAxis::Thickness ? "thickness-" : "porosity-") + buf;
  fs::path p = base;
  p.replace_filename(base.stem().string() + "." + tag + base.extension().string());
  return p;
}

std::string axis_label(scenarios::SweepAxis axis) {
  switch (axis) {
    case scenarios::SweepAxis::Separation:
      return "separation L (nm)";
    case scenarios::SweepAxis::Thickness:
      return "aerogel thickness D (nm)";
    case scenarios::SweepAxis::Porosity:
      return "porosity";
  }
  return "";
}

int run_force(const std::string& config_path, double gap_nm, std::optional<double> thickness,
              std::optional<double> porosity, std::ostream& out) {
  const Loaded l = load(config_path);
  io::MaterialResolver resolver(l.config, l.base_dir);
  auto spec = io::resolve_scenario(l.config, resolver);
  if (thickness) spec.aerogel_thickness_nm = *thickness;
  if (porosity) spec.porosity = *porosity;
  const auto result = lifshitz::casimir_pressure(scenarios::build_scenario(spec, gap_nm), l.config.quadrature);
  out << "gap_nm = " << sci(gap_nm) << "\n"
      << "pressure_Pa = " << sci(result.pressure_pa) << "\n"
      << "ideal_pressure_Pa = " << sci(result.ideal_pressure_pa) << "\n"
      << "reduction_factor = " << sci(result.reduction_factor) << "\n"
      << "rel_err_estimate = " << sci(result.diagnostics.rel_err_estimate) << "\n"
      << "nodes = " << result.diagnostics.xi_nodes << "x" << result.diagnostics.q_nodes << "\n";
  return 0;
}

int run_sweep(const std::string& config_path, std::string csv_path, std::string svg_path, std::ostream& out) {
  const Loaded l = load(config_path);
  io::MaterialResolver resolver(l.config, l.base_dir);
  const auto sweeps = io::resolve_sweeps(l.config, resolver);
  if (csv_path.empty()) csv_path = l.config.output.csv;
  if (svg_path.empty()) svg_path = l.config.output.svg;

  const auto& def = l.config.sweep;
  std::vector<scenarios::SweepResult> results;
  for (const auto& s : sweeps) results.push_back(scenarios::run_sweep(s));

  if (csv_path == "-") {
    if (results.size() != 1) throw InputError("--csv - needs a sweep without series; give a file name instead");
    csv_path.clear();
  }
  if (csv_path.empty() && results.size() == 1) {
    io::write_sweep_csv(results.front(), out);
  } else if (!csv_path.empty()) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      const fs::path p = def.series_axis == io::SeriesAxis::None
                             ? fs::path(csv_path)
                             : series_path(csv_path, def.series_axis, def.series_values[i]);
      auto f = open_output(p);
      io::write_sweep_csv(results[i], f);
      out << "wrote " << p.string() << "\n";
    }
  }

  if (!svg_path.empty()) {
    io::PlotSpec plot;
    plot.x = {axis_label(def.axis), l.config.output.x_log};
    plot.y = {"reduction factor F/Fc", l.config.output.y_log};
    plot.title = l.config.output.title;
    plot.width_px = l.config.output.width_px;
    plot.height_px = l.config.output.height_px;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const std::string label =
          def.series_axis == io::SeriesAxis::None ? "" : io::series_label(def.series_axis, def.series_values[i]);
      plot.series.push_back({i, io::Column::ReductionFactor, label});
    }
    auto f = open_output(svg_path);
    io::render_svg(results, plot, f);
    out << "wrote " << svg_path << "\n";
  }
  return 0;
}

std::vector<double> xi_grid(double lo, double hi, int points) { return scenarios::log_grid(lo, hi, points); }

int write_table(const std::vector<double>& xi, const std::vector<double>& eps, const std::string& out_path,
                std::ostream& out) {
  if (out_path.empty()) {
    io::write_permittivity_csv(xi, eps, out);
  } else {
    auto f = open_output(out_path);
    io::write_permittivity_csv(xi, eps, f);
  }
  return 0;
}

int run_material(const std::string& config_path, const std::string& name, double lo, double hi, int points,
                 const std::string& out_path, std::ostream& out) {
  const Loaded l = load(config_path);
  io::MaterialResolver resolver(l.config, l.base_dir);
  const auto model = resolver.resolve(name);
  const auto xi = xi_grid(lo, hi, points);
  std::vector<double> eps;
  eps.reserve(xi.size());
  for (double x : xi) eps.push_back(model.at(x));
  return write_table(xi, eps, out_path, out);
}

int run_kk(const std::string& config_path, const std::string& in_path, const std::string& format,
           const std::string& low, const std::string& tail, double lo, double hi, int points,
           const std::string& out_path, std::ostream& out) {
  if (!config_path.empty()) (void)load(config_path);
  std::ifstream in(in_path);
  if (!in) throw IoError("cannot open optical table " + in_path);
  const auto table = materials::load_optical_table(
      in, format == "nk" ? materials::TableFormat::NK : materials::TableFormat::Eps2);
  materials::KkSettings settings;
  settings.low = low == "none" ? materials::LowEnergyExtrapolation::None
                               : materials::LowEnergyExtrapolation::LinearToZero;
  settings.tail = tail == "none" ? materials::HighEnergyTail::None : materials::HighEnergyTail::InverseCube;
  const auto xi = xi_grid(lo, hi, points);
  std::vector<double> eps;
  eps.reserve(xi.size());
  for (double x : xi) eps.push_back(materials::kk_to_imaginary_axis(table, x, settings));
  return write_table(xi, eps, out_path, out);
}

int run_solve(const std::string& config_path, const std::string& axis, double target, double lo, double hi,
              double gap_nm, double tol, std::ostream& out) {
  const Loaded l = load(config_path);
  io::MaterialResolver resolver(l.config, l.base_dir);
  const auto spec = io::resolve_scenario(l.config, resolver);
  const auto control = axis == "thickness" ? scenarios::ControlAxis::Thickness : scenarios::ControlAxis::Porosity;
  const double value =
      scenarios::solve_for_target(control, target, {lo, hi}, spec, gap_nm, l.config.quadrature, tol);
  out << axis << " = " << sci(value) << "\n";
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-temperature Casimir pressure between layered planar stacks", "casimir"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string config_path;

  auto* force = app.add_subcommand("force", "Pressure, ideal pressure and reduction factor at one separation");
  double gap_nm = 0.0;
  std::optional<double> thickness_nm;
  std::optional<double> porosity;
  force->add_option("--config", config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
  force->add_option("--gap-nm", gap_nm, "Plate separation L in nm")->required();
  force->add_option("--thickness-nm", thickness_nm, "Override the aerogel thickness D in nm");
  force->add_option("--porosity", porosity, "Override the aerogel porosity (air fraction)");

  auto* sweep = app.add_subcommand("sweep", "Run the configured sweep; write CSV and SVG");
  std::string csv_path, svg_path;
  sweep->add_option("--config", config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--csv", csv_path, "CSV output (overrides [output] csv; - for stdout)");
  sweep->add_option("--svg", svg_path, "SVG output (overrides [output] svg)");

  auto* material = app.add_subcommand("material", "Tabulate eps(i xi) of a configured material");
  std::string material_name;
  double xi_min = 1e-3, xi_max = 1e3;
  int points = 200;
  std::string out_path;
  material->add_option("--config", config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
  material->add_option("--name", material_name, "Material name from the configuration")->required();
  material->add_option("--xi-min-ev", xi_min, "Lowest imaginary frequency (eV)")->capture_default_str();
  material->add_option("--xi-max-ev", xi_max, "Highest imaginary frequency (eV)")->capture_default_str();
  material->add_option("--points", points, "Log-spaced grid points")->capture_default_str()->check(CLI::Range(1, 1000000));
  material->add_option("--out", out_path, "Output CSV (stdout if omitted)");

  auto* kk = app.add_subcommand("kk", "Kramers-Kronig transform of an optical table onto the imaginary axis");
  std::string in_path, format = "eps2", low = "linear", tail = "inverse_cube";
  kk->add_option("--config", config_path, "Run configuration file (validated only)")->check(CLI::ExistingFile);
  kk->add_option("--in", in_path, "Optical table CSV")->required()->check(CLI::ExistingFile);
  kk->add_option("--out", out_path, "Output CSV (stdout if omitted)");
  kk->add_option("--format", format, "Table columns")->check(CLI::IsMember({"eps2", "nk"}))->capture_default_str();
  kk->add_option("--low", low, "Extrapolation below the first point")
      ->check(CLI::IsMember({"linear", "none"}))
      ->capture_default_str();
  kk->add_option("--tail", tail, "Extrapolation above the last point")
      ->check(CLI::IsMember({"inverse_cube", "none"}))
      ->capture_default_str();
  kk->add_option("--xi-min-ev", xi_min, "Lowest imaginary frequency (eV)")->capture_default_str();
  kk->add_option("--xi-max-ev", xi_max, "Highest imaginary frequency (eV)")->capture_default_str();
  kk->add_option("--points", points, "Log-spaced grid points")->capture_default_str()->check(CLI::Range(1, 1000000));

  auto* solve = app.add_subcommand("solve", "Porosity or thickness giving a target reduction factor");
  std::string axis = "porosity";
  double target = 0.0, lo = 0.0, hi = 0.0, tol = 1e-8;
  solve->add_option("--config", config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
  solve->add_option("--axis", axis, "Control parameter")->check(CLI::IsMember({"porosity", "thickness"}));
  solve->add_option("--target", target, "Target reduction factor in (0, 1)")->required();
  solve->add_option("--lo", lo, "Bracket low end")->required();
  solve->add_option("--hi", hi, "Bracket high end")->required();
  solve->add_option("--gap-nm", gap_nm, "Plate separation L in nm")->required();
  solve->add_option("--tol", tol, "Absolute tolerance on the reduction factor")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << app.help();
    err << "error: usage: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (force->parsed()) return run_force(config_path, gap_nm, thickness_nm, porosity, out);
    if (sweep->parsed()) return run_sweep(config_path, csv_path, svg_path, out);
    if (material->parsed()) return run_material(config_path, material_name, xi_min, xi_max, points, out_path, out);
    if (kk->parsed())
      return run_kk(config_path, in_path, format, low, tail, xi_min, xi_max, points, out_path, out);
    if (solve->parsed()) return run_solve(config_path, axis, target, lo, hi, gap_nm, tol, out);
  } catch (const Error& e) {
    err << "error: " << e.category() << ": " << one_line(e.what()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << "\n";
    return 1;
  }
  err << "error: usage: no subcommand\n";
  return 2;
}

}  // namespace casimir::cli
