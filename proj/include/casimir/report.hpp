#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/scenarios.hpp"

namespace casimir::io {

/// Header `axis_value,pressure_Pa,ideal_pressure_Pa,reduction_factor,rel_err_estimate`,
/// one row per grid point, 9 significant digits in scientific notation, '\n' endings.
void write_sweep_csv(const scenarios::SweepResult& result, std::ostream& sink);

/// `xi_eV,eps` table.
void write_permittivity_csv(const std::vector<double>& xi_ev, const std::vector<double>& eps, std::ostream& sink);

enum class Column { ReductionFactor, Pressure, IdealPressure, AbsPressure };

struct Axis {
  std::string label;
  bool log_scale = false;
};

struct Series {
  std::size_t result_index = 0;
  Column column = Column::ReductionFactor;
  std::string label;
};

struct PlotSpec {
  Axis x{"separation (nm)", true};
  Axis y{"reduction factor F/Fc", true};
  std::vector<Series> series;
  std::string title;
  int width_px = 800;
  int height_px = 560;
};

/// Standalone SVG line chart: one polyline per series, ticks and a legend.
void render_svg(const std::vector<scenarios::SweepResult>& results, const PlotSpec& plot, std::ostream& sink);

}  // namespace casimir::io
