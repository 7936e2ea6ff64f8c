#include "casimir/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir::scenarios {

namespace {

using optics::Layer;
using optics::Stack;

Stack layered(const DielectricModel& layer, double thickness_nm, const DielectricModel& substrate) {
  Stack s = Stack::half_space(substrate);
  if (thickness_nm > 0.0) s.layers.push_back(Layer{thickness_nm, layer});
  return s;
}

double reduction_at(const ScenarioSpec& spec, double gap_nm, const QuadratureSpec& quad, Parallelism par) {
  return lifshitz::casimir_pressure(build_scenario(spec, gap_nm), quad, par).reduction_factor;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::AerogelOnAuSymmetric:
      return "aerogel_on_au_symmetric";
    case ScenarioKind::AuVsAerogelOnAu:
      return "au_vs_aerogel_on_au";
    case ScenarioKind::FreestandingSlabs:
      return "freestanding_slabs";
    case ScenarioKind::PorositySweep:
      return "porosity_sweep";
    case ScenarioKind::SiliconReference:
      return "si_reference";
    case ScenarioKind::Custom:
      return "custom";
  }
  return "unknown";
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Separation:
      return "separation";
    case SweepAxis::Thickness:
      return "thickness";
    case SweepAxis::Porosity:
      return "porosity";
  }
  return "unknown";
}

void ScenarioSpec::validate() const {
  if (!(aerogel_thickness_nm >= 0.0) || !std::isfinite(aerogel_thickness_nm))
    throw DomainError("aerogel thickness must be non-negative, got " + format_value(aerogel_thickness_nm) + " nm");
  if (!(porosity >= 0.0 && porosity <= 1.0))
    throw DomainError("porosity " + format_value(porosity) + " outside [0, 1]");
  gold_model.validate();
  if (kind == ScenarioKind::SiliconReference && !reference_model)
    throw InputError("si_reference scenario needs a reference layer material");
  if (kind == ScenarioKind::Custom && !custom_template) throw InputError("custom scenario needs a gap template");
}

void SweepSpec::validate() const {
  fixed.validate();
  quad.validate();
  if (grid.empty()) throw InputError("sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    if (i > 0 && !(v > grid[i - 1])) throw InputError("sweep grid must be strictly increasing");
    bool ok = std::isfinite(v);
    switch (axis) {
      case SweepAxis::Separation:
        ok = ok && v > 0.0;
        break;
      case SweepAxis::Thickness:
        ok = ok && v >= 0.0;
        break;
      case SweepAxis::Porosity:
        ok = ok && v >= 0.0 && v <= 1.0;
        break;
    }
    if (!ok) throw DomainError(to_string(axis) + " grid value " + format_value(v) + " out of range");
  }
  if (axis != SweepAxis::Separation && !(gap_nm > 0.0))
    throw DomainError("sweep separation must be positive");
}

DielectricModel aerogel_model(const ScenarioSpec& spec) {
  return DielectricModel::mixed(spec.silica_model, spec.porosity, spec.mixing_rule);
}

GapConfig build_scenario(const ScenarioSpec& spec, double gap_nm) {
  spec.validate();
  if (!(gap_nm > 0.0)) throw DomainError("separation must be positive, got " + format_value(gap_nm) + " nm");

  const DielectricModel gold = DielectricModel::drude(spec.gold_model);
  const DielectricModel vacuum = DielectricModel::vacuum();
  const double d = spec.aerogel_thickness_nm;

  GapConfig config;
  config.gap_nm = gap_nm;
  switch (spec.kind) {
    case ScenarioKind::AerogelOnAuSymmetric: {
      const auto aerogel = aerogel_model(spec);
      config.left = layered(aerogel, d, gold);
      config.right = layered(aerogel, d, gold);
      break;
    }
    case ScenarioKind::AuVsAerogelOnAu: {
      config.left = Stack::half_space(gold);
      config.right = layered(aerogel_model(spec), d, gold);
      break;
    }
    case ScenarioKind::FreestandingSlabs:
    case ScenarioKind::PorositySweep: {
      const auto aerogel = aerogel_model(spec);
      config.left = layered(aerogel, d, vacuum);
      config.right = layered(aerogel, d, vacuum);
      break;
    }
    case ScenarioKind::SiliconReference: {
      config.left = layered(*spec.reference_model, d, gold);
      config.right = layered(*spec.reference_model, d, gold);
      break;
    }
    case ScenarioKind::Custom: {
      config = *spec.custom_template;
      config.gap_nm = gap_nm;
      break;
    }
  }
  return config;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 1) throw DomainError("invalid log grid");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) out[i] = std::exp(a + (b - a) * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (!(hi > lo) || count < 1) throw DomainError("invalid linear grid");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

std::vector<double> default_separation_grid() { return log_grid(100.0, 2000.0, 40); }

std::pair<ScenarioSpec, double> apply_axis(const SweepSpec& sweep, double value) {
  ScenarioSpec spec = sweep.fixed;
  double gap = sweep.gap_nm;
  switch (sweep.axis) {
    case SweepAxis::Separation:
      gap = value;
      break;
    case SweepAxis::Thickness:
      spec.aerogel_thickness_nm = value;
      break;
    case SweepAxis::Porosity:
      spec.porosity = value;
      break;
  }
  return {spec, gap};
}

SweepResult run_sweep(const SweepSpec& sweep, Parallelism par) {
  sweep.validate();
  SweepResult result;
  result.axis = sweep.axis;
  result.rows.reserve(sweep.grid.size());
  for (double value : sweep.grid) {
    const auto [spec, gap] = apply_axis(sweep, value);
    try {
      const ForceResult f = lifshitz::casimir_pressure(build_scenario(spec, gap), sweep.quad, par);
      result.rows.push_back({value, f.pressure_pa, f.ideal_pressure_pa, f.reduction_factor, f.diagnostics});
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string(e.what()) + " [sweep " + to_string(sweep.axis) + " = " +
                                 format_value(value) + "]",
                             e.xi_nodes(), e.q_nodes(), e.rel_err_estimate());
    }
  }
  return result;
}

std::vector<ComparisonRow> compare_scenarios(const SweepResult& a, const SweepResult& b) {
  if (a.axis != b.axis || a.rows.size() != b.rows.size())
    throw InputError("compared sweeps must share axis and grid");
  std::vector<ComparisonRow> out;
  out.reserve(a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].axis_value != b.rows[i].axis_value)
      throw InputError("compared sweeps have different grid values at row " + std::to_string(i));
    const double fa = a.rows[i].reduction_factor;
    const double fb = b.rows[i].reduction_factor;
    out.push_back({a.rows[i].axis_value, fa, fb, fa / fb});
  }
  return out;
}

std::vector<ComparisonRow> compare_scenarios(const SweepSpec& a, const SweepSpec& b, Parallelism par) {
  if (a.axis != b.axis || a.grid != b.grid) throw InputError("compared sweeps must share axis and grid");
  return compare_scenarios(run_sweep(a, par), run_sweep(b, par));
}

double solve_for_target(ControlAxis axis, double target_fr, std::pair<double, double> bracket,
                        const ScenarioSpec& fixed, double gap_nm, const QuadratureSpec& quad, double tol,
                        Parallelism par) {
  if (!(target_fr > 0.0 && target_fr < 1.0)) throw DomainError("target reduction factor must lie in (0, 1)");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  auto [lo, hi] = bracket;
  if (!(hi > lo)) throw DomainError("bracket must satisfy lo < hi");
  if (axis == ControlAxis::Porosity && (lo < 0.0 || hi > 1.0))
    throw DomainError("porosity bracket must lie within [0, 1]");
  if (axis == ControlAxis::Thickness && lo < 0.0) throw DomainError("thickness bracket must be non-negative");

  auto residual = [&](double value) {
    ScenarioSpec spec = fixed;
    if (axis == ControlAxis::Porosity)
      spec.porosity = value;
    else
      spec.aerogel_thickness_nm = value;
    return reduction_at(spec, gap_nm, quad, par) - target_fr;
  };

  const double f_lo = residual(lo);
  if (std::abs(f_lo) < tol) return lo;
  const double f_hi = residual(hi);
  if (std::abs(f_hi) < tol) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream os;
    os.precision(10);
    os << "target F_r=" << target_fr << " not bracketed: F_r(" << lo << ")=" << f_lo + target_fr << ", F_r(" << hi
       << ")=" << f_hi + target_fr;
    throw InfeasibleTargetError(os.str(), f_lo + target_fr, f_hi + target_fr);
  }

  const bool increasing = f_hi > f_lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double f_mid = residual(mid);
    if (std::abs(f_mid) < tol) return mid;
    if ((f_mid < 0.0) == increasing)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid)))
      return 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

}  // namespace casimir::scenarios
