#include <doctest.h>

#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/report.hpp"

using namespace casimir;
using namespace casimir::io;
using scenarios::SweepResult;
using scenarios::SweepRow;

namespace {

SweepResult result_with(std::vector<std::pair<double, double>> xy) {
  SweepResult r;
  for (auto [x, y] : xy) {
    SweepRow row;
    row.axis_value = x;
    row.reduction_factor = y;
    row.pressure_pa = -y;
    row.ideal_pressure_pa = -1.0;
    r.rows.push_back(row);
  }
  return r;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("sweep csv") {
  std::ostringstream one;
  write_sweep_csv(result_with({{100.0, 0.25}}), one);
  CHECK(one.str() ==
        "axis_value,pressure_Pa,ideal_pressure_Pa,reduction_factor,rel_err_estimate\n"
        "1.00000000e+02,-2.50000000e-01,-1.00000000e+00,2.50000000e-01,0.00000000e+00\n");

  std::ostringstream a, b;
  const auto r = result_with({{100.0, 0.1}, {200.0, 0.2}, {300.0, 1.0 / 3.0}});
  write_sweep_csv(r, a);
  write_sweep_csv(r, b);
  CHECK(a.str() == b.str());
  CHECK(count(a.str(), "\n") == 4);

  std::ostringstream empty;
  CHECK_THROWS_AS(write_sweep_csv(SweepResult{}, empty), InputError);
  CHECK(empty.str().empty());

  std::ostringstream broken;
  broken.setstate(std::ios::badbit);
  CHECK_THROWS_AS(write_sweep_csv(r, broken), IoError);
}

TEST_CASE("svg with linear axes has one polyline") {
  PlotSpec plot;
  plot.x.log_scale = false;
  plot.y.log_scale = false;
  plot.series = {{0, Column::ReductionFactor, "only"}};
  std::ostringstream os;
  render_svg({result_with({{1.0, 0.0}, {2.0, 0.5}, {3.0, 0.7}})}, plot, os);
  const auto svg = os.str();
  CHECK(count(svg, "<polyline") == 1);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg log axis ticks at decades") {
  PlotSpec plot;
  plot.series = {{0, Column::ReductionFactor, "a"}, {1, Column::ReductionFactor, "b"}};
  std::ostringstream os;
  render_svg({result_with({{100.0, 1e-7}, {1000.0, 1e-4}}), result_with({{100.0, 1e-5}, {2000.0, 1e-2}})}, plot, os);
  const auto svg = os.str();
  CHECK(count(svg, "<polyline") == 2);
  for (int e = -7; e <= -2; ++e) CHECK(svg.find(">1e" + std::to_string(e) + "<") != std::string::npos);
  CHECK(svg.find(">1e2<") != std::string::npos);
  CHECK(svg.find(">1e3<") != std::string::npos);
}

TEST_CASE("svg refuses non-positive values on a log axis") {
  PlotSpec plot;
  plot.series = {{0, Column::ReductionFactor, "zeroed"}};
  std::ostringstream os;
  try {
    render_svg({result_with({{100.0, 1e-3}, {200.0, 0.0}})}, plot, os);
    FAIL("expected a plot error");
  } catch (const PlotError& e) {
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    CHECK(std::string(e.what()).find("zeroed") != std::string::npos);
  }
  plot.series = {{3, Column::ReductionFactor, "missing"}};
  CHECK_THROWS_AS(render_svg({result_with({{1.0, 1.0}})}, plot, os), PlotError);
}

TEST_CASE("svg output is deterministic") {
  PlotSpec plot;
  plot.title = "t & <u>";
  plot.series = {{0, Column::AbsPressure, "p"}};
  const auto r = result_with({{100.0, 0.5}, {150.0, 0.25}, {2000.0, 0.01}});
  std::ostringstream a, b;
  render_svg({r}, plot, a);
  render_svg({r}, plot, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("t &amp; &lt;u&gt;") != std::string::npos);
}
