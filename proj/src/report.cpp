#include "casimir/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::io {

namespace {

std::string sci9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

std::string fixed2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string short_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void check_sink(std::ostream& sink, const char* what) {
  if (!sink) throw IoError(std::string("failed writing ") + what);
}

double column_value(const scenarios::SweepRow& row, Column column) {
  switch (column) {
    case Column::ReductionFactor:
      return row.reduction_factor;
    case Column::Pressure:
      return row.pressure_pa;
    case Column::IdealPressure:
      return row.ideal_pressure_pa;
    case Column::AbsPressure:
      return std::abs(row.pressure_pa);
  }
  return 0.0;
}

struct Ticks {
  double lo = 0.0;  // axis range in plotting coordinates (log10 for log axes)
  double hi = 1.0;
  std::vector<std::pair<double, std::string>> marks;
};

Ticks log_ticks(double vmin, double vmax) {
  Ticks t;
  t.lo = std::floor(std::log10(vmin));
  t.hi = std::ceil(std::log10(vmax));
  if (t.hi <= t.lo) t.hi = t.lo + 1.0;
  const int span = static_cast<int>(t.hi - t.lo);
  const int step = std::max(1, (span + 9) / 10);
  for (int e = static_cast<int>(t.lo); e <= static_cast<int>(t.hi); e += step)
    t.marks.push_back({static_cast<double>(e), "1e" + std::to_string(e)});
  return t;
}

Ticks linear_ticks(double vmin, double vmax) {
  Ticks t;
  if (vmax <= vmin) {
    const double pad = vmin == 0.0 ? 1.0 : std::abs(vmin) * 0.1;
    vmin -= pad;
    vmax += pad;
  }
  const double raw = (vmax - vmin) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  const double step = (norm < 1.5 ? 1.0 : norm < 3.0 ? 2.0 : norm < 7.0 ? 5.0 : 10.0) * mag;
  t.lo = std::floor(vmin / step) * step;
  t.hi = std::ceil(vmax / step) * step;
  const int count = static_cast<int>(std::lround((t.hi - t.lo) / step));
  for (int i = 0; i <= count; ++i) {
    double v = t.lo + i * step;
    if (std::abs(v) < step * 1e-9) v = 0.0;
    t.marks.push_back({v, short_number(v)});
  }
  return t;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
                                    "#17becf"};

}  // namespace

void write_sweep_csv(const scenarios::SweepResult& result, std::ostream& sink) {
  if (result.rows.empty()) throw InputError("refusing to write an empty sweep result");
  std::string text = "axis_value,pressure_Pa,ideal_pressure_Pa,reduction_factor,rel_err_estimate\n";
  for (const auto& row : result.rows) {
    text += sci9(row.axis_value) + ',' + sci9(row.pressure_pa) + ',' + sci9(row.ideal_pressure_pa) + ',' +
            sci9(row.reduction_factor) + ',' + sci9(row.diagnostics.rel_err_estimate) + '\n';
  }
  sink << text;
  sink.flush();
  check_sink(sink, "sweep CSV");
}

void write_permittivity_csv(const std::vector<double>& xi_ev, const std::vector<double>& eps, std::ostream& sink) {
  if (xi_ev.empty() || xi_ev.size() != eps.size()) throw InputError("permittivity table needs matching columns");
  std::string text = "xi_eV,eps\n";
  for (std::size_t i = 0; i < xi_ev.size(); ++i) text += sci9(xi_ev[i]) + ',' + sci9(eps[i]) + '\n';
  sink << text;
  sink.flush();
  check_sink(sink, "permittivity CSV");
}

void render_svg(const std::vector<scenarios::SweepResult>& results, const PlotSpec& plot, std::ostream& sink) {
  if (plot.series.empty()) throw PlotError("plot needs at least one series");
  if (plot.width_px < 200 || plot.height_px < 150) throw PlotError("plot dimensions too small");

  struct Line {
    std::string label;
    std::vector<std::pair<double, double>> xy;
  };
  std::vector<Line> lines;
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  for (const auto& s : plot.series) {
    if (s.result_index >= results.size()) throw PlotError("series '" + s.label + "' references a missing result");
    const auto& rows = results[s.result_index].rows;
    if (rows.empty()) throw PlotError("series '" + s.label + "' has no rows");
    Line line{s.label, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double x = rows[i].axis_value;
      const double y = column_value(rows[i], s.column);
      if (!std::isfinite(x) || !std::isfinite(y))
        throw PlotError("series '" + s.label + "' row " + std::to_string(i) + ": non-finite value");
      if (plot.x.log_scale && !(x > 0.0))
        throw PlotError("series '" + s.label + "' row " + std::to_string(i) + ": non-positive x value " +
                        short_number(x) + " on a log axis");
      if (plot.y.log_scale && !(y > 0.0))
        throw PlotError("series '" + s.label + "' row " + std::to_string(i) + ": non-positive y value " +
                        short_number(y) + " on a log axis");
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      line.xy.emplace_back(x, y);
    }
    lines.push_back(std::move(line));
  }

  const Ticks xt = plot.x.log_scale ? log_ticks(xmin, xmax) : linear_ticks(xmin, xmax);
  const Ticks yt = plot.y.log_scale ? log_ticks(ymin, ymax) : linear_ticks(ymin, ymax);

  const double w = plot.width_px;
  const double h = plot.height_px;
  const double left = 80.0, right = 20.0, top = plot.title.empty() ? 20.0 : 44.0, bottom = 60.0;
  const double pw = w - left - right;
  const double ph = h - top - bottom;
  auto px = [&](double x) {
    const double v = plot.x.log_scale ? std::log10(x) : x;
    return left + (v - xt.lo) / (xt.hi - xt.lo) * pw;
  };
  auto py = [&](double y) {
    const double v = plot.y.log_scale ? std::log10(y) : y;
    return top + ph - (v - yt.lo) / (yt.hi - yt.lo) * ph;
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(plot.width_px) + "\" height=\"" +
         std::to_string(plot.height_px) + "\" viewBox=\"0 0 " + std::to_string(plot.width_px) + " " +
         std::to_string(plot.height_px) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(plot.width_px) + "\" height=\"" +
         std::to_string(plot.height_px) + "\" fill=\"white\"/>\n";
  if (!plot.title.empty())
    out += "<text x=\"" + fixed2(w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
           escape_xml(plot.title) + "</text>\n";

  // Grid and ticks.
  for (const auto& [v, label] : xt.marks) {
    const double x = left + (v - xt.lo) / (xt.hi - xt.lo) * pw;
    out += "<line x1=\"" + fixed2(x) + "\" y1=\"" + fixed2(top) + "\" x2=\"" + fixed2(x) + "\" y2=\"" +
           fixed2(top + ph) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + fixed2(x) + "\" y=\"" + fixed2(top + ph + 18) + "\" text-anchor=\"middle\">" +
           escape_xml(label) + "</text>\n";
  }
  for (const auto& [v, label] : yt.marks) {
    const double y = top + ph - (v - yt.lo) / (yt.hi - yt.lo) * ph;
    out += "<line x1=\"" + fixed2(left) + "\" y1=\"" + fixed2(y) + "\" x2=\"" + fixed2(left + pw) + "\" y2=\"" +
           fixed2(y) + "\" stroke=\"#e0e0e0\"/>\n";
    out += "<text x=\"" + fixed2(left - 6) + "\" y=\"" + fixed2(y + 4) + "\" text-anchor=\"end\">" +
           escape_xml(label) + "</text>\n";
  }
  out += "<rect x=\"" + fixed2(left) + "\" y=\"" + fixed2(top) + "\" width=\"" + fixed2(pw) + "\" height=\"" +
         fixed2(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<text x=\"" + fixed2(left + pw / 2) + "\" y=\"" + fixed2(h - 16) + "\" text-anchor=\"middle\">" +
         escape_xml(plot.x.label) + "</text>\n";
  out += "<text x=\"18\" y=\"" + fixed2(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fixed2(top + ph / 2) + ")\">" + escape_xml(plot.y.label) + "</text>\n";

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.8\" points=\"";
    for (std::size_t j = 0; j < lines[i].xy.size(); ++j) {
      if (j) out += ' ';
      out += fixed2(px(lines[i].xy[j].first)) + ',' + fixed2(py(lines[i].xy[j].second));
    }
    out += "\"/>\n";
  }

  // Legend, top right inside the frame.
  const double lx = left + pw - 170.0;
  double ly = top + 16.0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].label.empty()) continue;
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<line x1=\"" + fixed2(lx) + "\" y1=\"" + fixed2(ly - 4) + "\" x2=\"" + fixed2(lx + 24) + "\" y2=\"" +
           fixed2(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fixed2(lx + 30) + "\" y=\"" + fixed2(ly) + "\">" + escape_xml(lines[i].label) +
           "</text>\n";
    ly += 16.0;
  }
  out += "</svg>\n";

  sink << out;
  sink.flush();
  check_sink(sink, "SVG");
}

}  // namespace casimir::io
