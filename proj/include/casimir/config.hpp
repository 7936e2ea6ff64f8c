#pragma once

// Run configuration: a sectioned key = value text format.
//
//   # comment
//   [material.gold]
//   model = drude
//   plasma_eV = 9
//   damping_eV = 0.035
//
//   [material.silica]
//   model = lorentz
//   oscillator = 242.394, 13.37, 0.5      # strength_eV2, resonance_eV, width_eV
//
//   [scenario]
//   kind = freestanding_slabs
//   thickness_nm = 500
//   porosity = 0.9
//   silica = silica
//   gold = gold
//
//   [sweep]
//   axis = separation
//   grid = log(100, 2000, 40)
//
// Sections: material.<name>, scenario, sweep, quadrature, output. Unknown
// sections or keys are rejected with their line number.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/scenarios.hpp"

namespace casimir::io {

enum class MaterialKind { Vacuum, Drude, Lorentz, Tabulated, Mixed };

struct MaterialDef {
  std::string name;
  MaterialKind kind = MaterialKind::Vacuum;
  materials::DrudeParams drude;
  std::vector<materials::LorentzOscillator> oscillators;
  std::string table_path;
  materials::TableFormat table_format = materials::TableFormat::Eps2;
  materials::KkSettings kk;
  std::string host;
  double porosity = 0.9;
  materials::MixingRule rule = materials::MixingRule::ClausiusMossotti;

  friend bool operator==(const MaterialDef&, const MaterialDef&) = default;
};

struct LayerDef {
  std::string material;
  double thickness_nm = 0.0;
  friend bool operator==(const LayerDef&, const LayerDef&) = default;
};

inline constexpr const char* kIdealMirror = "ideal_mirror";

struct StackDef {
  std::vector<LayerDef> layers;
  std::string substrate = "vacuum";  // material name, "vacuum" or "ideal_mirror"
  friend bool operator==(const StackDef&, const StackDef&) = default;
};

struct ScenarioDef {
  scenarios::ScenarioKind kind = scenarios::ScenarioKind::AerogelOnAuSymmetric;
  double thickness_nm = 500.0;
  double porosity = 0.9;
  std::string silica;  // empty: built-in silica surrogate
  std::string gold;    // empty: built-in Drude gold
  materials::MixingRule mixing = materials::MixingRule::ClausiusMossotti;
  std::string reference;
  StackDef left;
  StackDef right;
  friend bool operator==(const ScenarioDef&, const ScenarioDef&) = default;
};

enum class SeriesAxis { None, Thickness, Porosity };

struct SweepDef {
  scenarios::SweepAxis axis = scenarios::SweepAxis::Separation;
  std::vector<double> grid = scenarios::default_separation_grid();
  double gap_nm = 1000.0;
  /// Optional family of curves: one sweep per value.
  SeriesAxis series_axis = SeriesAxis::None;
  std::vector<double> series_values;
  friend bool operator==(const SweepDef&, const SweepDef&) = default;
};

struct OutputDef {
  std::string csv;
  std::string svg;
  bool x_log = true;
  bool y_log = true;
  std::string title;
  int width_px = 800;
  int height_px = 560;
  friend bool operator==(const OutputDef&, const OutputDef&) = default;
};

struct RunConfig {
  std::vector<MaterialDef> materials;  // in file order
  ScenarioDef scenario;
  SweepDef sweep;
  lifshitz::QuadratureSpec quadrature;
  OutputDef output;

  const MaterialDef* find_material(const std::string& name) const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates. Throws ConfigError naming the line and field.
RunConfig parse_config(std::istream& source);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// Builds DielectricModels. Tabulated files are resolved against `base_dir`.
class MaterialResolver {
 public:
  MaterialResolver(const RunConfig& config, std::filesystem::path base_dir);
  materials::DielectricModel resolve(const std::string& name);

 private:
  const RunConfig& config_;
  std::filesystem::path base_dir_;
  std::map<std::string, materials::DielectricModel> cache_;
};

scenarios::ScenarioSpec resolve_scenario(const RunConfig& config, MaterialResolver& resolver);

/// One SweepSpec per series value (a single one when no series is set).
std::vector<scenarios::SweepSpec> resolve_sweeps(const RunConfig& config, MaterialResolver& resolver);

std::string series_label(SeriesAxis axis, double value);

}  // namespace casimir::io
