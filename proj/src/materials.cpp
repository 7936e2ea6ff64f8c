#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::materials {

namespace {

void require_positive_xi(double xi_ev, const char* who) {
  if (!(xi_ev > 0.0) || !std::isfinite(xi_ev)) {
    std::ostringstream os;
    os << who << ": imaginary frequency must be positive, got " << xi_ev << " eV";
    throw DomainError(os.str());
  }
}

void check_mixing_inputs(double host_eps, double porosity) {
  if (!(porosity >= 0.0 && porosity <= 1.0)) {
    std::ostringstream os;
    os << "porosity " << porosity << " outside [0, 1]";
    throw DomainError(os.str());
  }
  if (!(host_eps >= 1.0) || !std::isfinite(host_eps)) {
    std::ostringstream os;
    os << "host permittivity " << host_eps << " < 1 is not supported by effective-medium mixing";
    throw UnsupportedMaterialError(os.str());
  }
}

// int_{w_n}^inf dw / (w^2 (w^2 + xi^2)), written to avoid cancellation when xi << w_n.
double inverse_cube_tail_integral(double w_n, double xi) {
  const double y = xi / w_n;
  if (y < 1e-2) {
    const double y2 = y * y;
    const double w3 = w_n * w_n * w_n;
    return (1.0 / 3.0 - y2 / 5.0 + y2 * y2 / 7.0 - y2 * y2 * y2 / 9.0) / w3;
  }
  return (1.0 / w_n - std::atan(y) / xi) / (xi * xi);
}

// int_0^{w_0} w^2 / (w^2 + xi^2) dw.
double linear_head_integral(double w_0, double xi) {
  const double y = w_0 / xi;
  if (y < 1e-2) {
    const double y2 = y * y;
    return w_0 * y2 * (1.0 / 3.0 - y2 / 5.0 + y2 * y2 / 7.0);
  }
  return w_0 - xi * std::atan(y);
}

}  // namespace

void DrudeParams::validate() const {
  if (!(plasma_ev > 0.0) || !std::isfinite(plasma_ev))
    throw DomainError("Drude plasma energy must be positive");
  if (!(damping_ev >= 0.0) || !std::isfinite(damping_ev))
    throw DomainError("Drude damping energy must be non-negative");
}

void LorentzOscillator::validate() const {
  if (!(strength_ev2 >= 0.0) || !std::isfinite(strength_ev2))
    throw DomainError("Lorentz oscillator strength must be non-negative");
  if (!(resonance_ev > 0.0) || !std::isfinite(resonance_ev))
    throw DomainError("Lorentz oscillator resonance energy must be positive");
  if (!(width_ev >= 0.0) || !std::isfinite(width_ev))
    throw DomainError("Lorentz oscillator width must be non-negative");
}

TabulatedEps2 TabulatedEps2::from_points(std::vector<Point> points, std::string provenance) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const int row = static_cast<int>(i) + 1;
    if (!(p.energy_ev > 0.0) || !std::isfinite(p.energy_ev))
      throw FormatError("tabulated energy must be positive, point " + std::to_string(row), 0);
    if (i > 0 && !(p.energy_ev > points[i - 1].energy_ev))
      throw FormatError("tabulated energies must be strictly increasing, point " + std::to_string(row), 0);
    if (!(p.eps2 >= 0.0) || !std::isfinite(p.eps2))
      throw PassivityError("negative eps'' at point " + std::to_string(row));
  }
  TabulatedEps2 t;
  t.points_ = std::move(points);
  t.provenance_ = std::move(provenance);
  return t;
}

double eps_drude(const DrudeParams& params, double xi_ev) {
  require_positive_xi(xi_ev, "eps_drude");
  const double wp = params.plasma_ev;
  return 1.0 + wp * wp / (xi_ev * (xi_ev + params.damping_ev));
}

double eps_lorentz(const std::vector<LorentzOscillator>& oscillators, double xi_ev) {
  if (!(xi_ev >= 0.0)) throw DomainError("eps_lorentz: imaginary frequency must be non-negative");
  double eps = 1.0;
  for (const auto& o : oscillators) {
    const double w0 = o.resonance_ev;
    eps += o.strength_ev2 / (w0 * w0 + xi_ev * xi_ev + o.width_ev * xi_ev);
  }
  return eps;
}

double lorentz_eps2(const std::vector<LorentzOscillator>& oscillators, double omega_ev) {
  double eps2 = 0.0;
  for (const auto& o : oscillators) {
    const double w0 = o.resonance_ev;
    const double detune = w0 * w0 - omega_ev * omega_ev;
    const double gw = o.width_ev * omega_ev;
    eps2 += o.strength_ev2 * gw / (detune * detune + gw * gw);
  }
  return eps2;
}

double kk_to_imaginary_axis(const TabulatedEps2& table, double xi_ev, const KkSettings& settings) {
  require_positive_xi(xi_ev, "kk_to_imaginary_axis");
  const auto& pts = table.points();
  if (pts.empty()) throw InputError("kk_to_imaginary_axis: optical table is empty");

  const double xi2 = xi_ev * xi_ev;
  // In log-energy the integrand is w^2 eps''(w) / (w^2 + xi^2).
  auto integrand = [xi2](const TabulatedEps2::Point& p) {
    const double w2 = p.energy_ev * p.energy_ev;
    return w2 * p.eps2 / (w2 + xi2);
  };

  double integral = 0.0;
  double prev_h = integrand(pts.front());
  double prev_log = std::log(pts.front().energy_ev);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double h = integrand(pts[i]);
    const double lg = std::log(pts[i].energy_ev);
    integral += 0.5 * (h + prev_h) * (lg - prev_log);
    prev_h = h;
    prev_log = lg;
  }

  if (settings.low == LowEnergyExtrapolation::LinearToZero) {
    const auto& first = pts.front();
    integral += first.eps2 / first.energy_ev * linear_head_integral(first.energy_ev, xi_ev);
  }
  if (settings.tail == HighEnergyTail::InverseCube) {
    const auto& last = pts.back();
    const double wn = last.energy_ev;
    integral += last.eps2 * wn * wn * wn * inverse_cube_tail_integral(wn, xi_ev);
  }
  return 1.0 + 2.0 / kPi * integral;
}

double mix_clausius_mossotti(double host_eps, double porosity) {
  check_mixing_inputs(host_eps, porosity);
  if (porosity == 1.0) return 1.0;
  const double t = porosity * (1.0 - host_eps) / (1.0 + 2.0 * host_eps);
  return std::clamp(host_eps * (1.0 + 2.0 * t) / (1.0 - t), 1.0, host_eps);
}

double mix_looyenga(double host_eps, double porosity) {
  check_mixing_inputs(host_eps, porosity);
  if (porosity == 0.0) return host_eps;
  if (porosity == 1.0) return 1.0;
  const double c = porosity + (1.0 - porosity) * std::cbrt(host_eps);
  return std::clamp(c * c * c, 1.0, host_eps);
}

double mix(MixingRule rule, double host_eps, double porosity) {
  switch (rule) {
    case MixingRule::ClausiusMossotti:
      return mix_clausius_mossotti(host_eps, porosity);
    case MixingRule::Looyenga:
      return mix_looyenga(host_eps, porosity);
  }
  throw DomainError("unknown mixing rule");
}

DielectricModel DielectricModel::vacuum() { return DielectricModel(Vacuum{}); }

DielectricModel DielectricModel::drude(DrudeParams params) {
  params.validate();
  return DielectricModel(Drude{params});
}

DielectricModel DielectricModel::lorentz(std::vector<LorentzOscillator> oscillators) {
  for (const auto& o : oscillators) o.validate();
  return DielectricModel(LorentzSum{std::move(oscillators)});
}

DielectricModel DielectricModel::tabulated(TabulatedEps2 table, KkSettings settings) {
  if (table.size() == 0) throw InputError("optical table is empty");
  return DielectricModel(Tabulated{std::make_shared<const TabulatedEps2>(std::move(table)), settings});
}

DielectricModel DielectricModel::mixed(DielectricModel host, double porosity, MixingRule rule) {
  if (!(porosity >= 0.0 && porosity <= 1.0)) {
    std::ostringstream os;
    os << "porosity " << porosity << " outside [0, 1]";
    throw DomainError(os.str());
  }
  return DielectricModel(
      Mixed{MixingSpec{porosity, rule, std::make_shared<const DielectricModel>(std::move(host))}});
}

double DielectricModel::at(double xi_ev) const {
  struct Visitor {
    double xi;
    double operator()(const Vacuum&) const { return 1.0; }
    double operator()(const Drude& d) const { return eps_drude(d.params, xi); }
    double operator()(const LorentzSum& l) const { return eps_lorentz(l.oscillators, xi); }
    double operator()(const Tabulated& t) const { return kk_to_imaginary_axis(*t.table, xi, t.settings); }
    double operator()(const Mixed& m) const {
      return mix(m.spec.rule, m.spec.host->at(xi), m.spec.porosity);
    }
  };
  return std::visit(Visitor{xi_ev}, model_);
}

std::string DielectricModel::describe() const {
  struct Visitor {
    std::string operator()(const Vacuum&) const { return "vacuum"; }
    std::string operator()(const Drude& d) const {
      std::ostringstream os;
      os << "drude(wp=" << d.params.plasma_ev << " eV, gamma=" << d.params.damping_ev << " eV)";
      return os.str();
    }
    std::string operator()(const LorentzSum& l) const {
      return "lorentz(" + std::to_string(l.oscillators.size()) + " oscillators)";
    }
    std::string operator()(const Tabulated& t) const {
      return "tabulated(" + std::to_string(t.table->size()) + " points)";
    }
    std::string operator()(const Mixed& m) const {
      std::ostringstream os;
      os << (m.spec.rule == MixingRule::ClausiusMossotti ? "clausius-mossotti" : "looyenga")
         << "(porosity=" << m.spec.porosity << ", host=" << m.spec.host->describe() << ")";
      return os.str();
    }
  };
  return std::visit(Visitor{}, model_);
}

std::vector<LorentzOscillator> silica_surrogate_oscillators() {
  // Infrared phonons: resonance at the transverse-optic mode, strength = delta_eps * w0^2,
  // width 1% of w0. The UV term carries eps_inf - 1 = 1.356.
  return {
      {0.000207216, 0.14395, 0.00144},
      {0.0118356, 0.13291, 0.001329},
      {0.00107419, 0.09882, 0.000988},
      {0.000134431, 0.08642, 0.000864},
      {0.00255227, 0.05579, 0.000558},
      {0.000787486, 0.04885, 0.000489},
      {242.394, 13.37, 0.5},
  };
}

DielectricModel silica_surrogate() { return DielectricModel::lorentz(silica_surrogate_oscillators()); }

DielectricModel drude_gold() { return DielectricModel::drude(DrudeParams{9.0, 0.035}); }

}  // namespace casimir::materials
