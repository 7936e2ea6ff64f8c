#pragma once

// Dielectric response on the imaginary frequency axis.
//
// Every model is evaluated at a photon energy xi (eV) on the imaginary axis,
// where the permittivity is real. Models are immutable once built and may be
// shared freely between threads.

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace casimir::materials {

struct DrudeParams {
  double plasma_ev = 9.0;
  double damping_ev = 0.035;

  void validate() const;
  friend bool operator==(const DrudeParams&, const DrudeParams&) = default;
};

struct LorentzOscillator {
  double strength_ev2 = 0.0;   // f
  double resonance_ev = 1.0;   // omega_0
  double width_ev = 0.0;       // gamma

  void validate() const;
  friend bool operator==(const LorentzOscillator&, const LorentzOscillator&) = default;
};

/// Sampled absorption eps''(omega) on the real axis. Energies strictly increasing
/// and positive; eps'' non-negative.
class TabulatedEps2 {
 public:
  struct Point {
    double energy_ev;
    double eps2;
    friend bool operator==(const Point&, const Point&) = default;
  };

  /// Validates ordering and passivity; throws FormatError / PassivityError.
  static TabulatedEps2 from_points(std::vector<Point> points, std::string provenance = {});

  const std::vector<Point>& points() const noexcept { return points_; }
  const std::string& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return points_.size(); }

  friend bool operator==(const TabulatedEps2&, const TabulatedEps2&) = default;

 private:
  TabulatedEps2() = default;
  std::vector<Point> points_;
  std::string provenance_;
};

enum class LowEnergyExtrapolation { None, LinearToZero };
enum class HighEnergyTail { None, InverseCube };

struct KkSettings {
  LowEnergyExtrapolation low = LowEnergyExtrapolation::LinearToZero;
  HighEnergyTail tail = HighEnergyTail::InverseCube;
  friend bool operator==(const KkSettings&, const KkSettings&) = default;
};

enum class MixingRule { ClausiusMossotti, Looyenga };

class DielectricModel;

struct MixingSpec {
  double porosity = 0.9;  // air volume fraction
  MixingRule rule = MixingRule::ClausiusMossotti;
  std::shared_ptr<const DielectricModel> host;
};

class DielectricModel {
 public:
  struct Vacuum {};
  struct Drude {
    DrudeParams params;
  };
  struct LorentzSum {
    std::vector<LorentzOscillator> oscillators;
  };
  struct Tabulated {
    std::shared_ptr<const TabulatedEps2> table;
    KkSettings settings;
  };
  struct Mixed {
    MixingSpec spec;
  };
  using Variant = std::variant<Vacuum, Drude, LorentzSum, Tabulated, Mixed>;

  DielectricModel() = default;  // vacuum

  static DielectricModel vacuum();
  static DielectricModel drude(DrudeParams params);
  static DielectricModel lorentz(std::vector<LorentzOscillator> oscillators);
  static DielectricModel tabulated(TabulatedEps2 table, KkSettings settings = {});
  static DielectricModel mixed(DielectricModel host, double porosity, MixingRule rule);

  /// eps(i xi). xi must be positive (Lorentz sums and vacuum also accept 0).
  double at(double xi_ev) const;

  const Variant& variant() const noexcept { return model_; }
  bool is_vacuum() const noexcept { return std::holds_alternative<Vacuum>(model_); }
  std::string describe() const;

 private:
  explicit DielectricModel(Variant v) : model_(std::move(v)) {}
  Variant model_{Vacuum{}};
};

double eps_drude(const DrudeParams& params, double xi_ev);
double eps_lorentz(const std::vector<LorentzOscillator>& oscillators, double xi_ev);

/// Analytic eps''(omega) of a Lorentz sum on the real axis.
double lorentz_eps2(const std::vector<LorentzOscillator>& oscillators, double omega_ev);

/// 1 + (2/pi) * int_0^inf w eps''(w) / (w^2 + xi^2) dw, trapezoidal in log-energy over
/// the table, with analytic end pieces selected by `settings`.
double kk_to_imaginary_axis(const TabulatedEps2& table, double xi_ev, const KkSettings& settings = {});

double mix_clausius_mossotti(double host_eps, double porosity);
double mix_looyenga(double host_eps, double porosity);
double mix(MixingRule rule, double host_eps, double porosity);

enum class TableFormat { Eps2, NK };

/// Reads the optical-table CSV (`energy_eV,eps2` or `energy_eV,n,k`). Comment
/// lines start with '#' and become the table's provenance note.
TabulatedEps2 load_optical_table(std::istream& source, TableFormat format);

/// Lorentz-oscillator stand-in for tabulated silica: alpha-quartz ordinary-ray
/// infrared phonon modes plus one effective UV electronic resonance.
std::vector<LorentzOscillator> silica_surrogate_oscillators();
DielectricModel silica_surrogate();

/// Drude gold with plasma energy 9 eV and damping 0.035 eV.
DielectricModel drude_gold();

}  // namespace casimir::materials
