#pragma once

// Aerogel configurations, parameter sweeps and inverse solves for the reduction
// factor.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::scenarios {

using lifshitz::ForceResult;
using lifshitz::GapConfig;
using lifshitz::QuadratureDiagnostics;
using lifshitz::QuadratureSpec;
using materials::DielectricModel;
using materials::DrudeParams;
using materials::MixingRule;

enum class ScenarioKind {
  AerogelOnAuSymmetric,  // aerogel on Au | gap | aerogel on Au
  AuVsAerogelOnAu,       // bare Au half-space | gap | aerogel on Au
  FreestandingSlabs,     // aerogel slab | gap | aerogel slab, no substrate
  PorositySweep,         // freestanding slabs, porosity varied
  SiliconReference,      // reference layer on Au on both sides
  Custom,
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::AerogelOnAuSymmetric;
  double aerogel_thickness_nm = 500.0;
  double porosity = 0.90;
  DielectricModel silica_model = materials::silica_surrogate();
  DrudeParams gold_model{9.0, 0.035};
  MixingRule mixing_rule = MixingRule::ClausiusMossotti;
  /// Layer material for SiliconReference.
  std::optional<DielectricModel> reference_model;
  /// Required for Custom; its gap is replaced by the requested separation.
  std::optional<GapConfig> custom_template;

  void validate() const;
};

enum class SweepAxis { Separation, Thickness, Porosity };

struct SweepSpec {
  SweepAxis axis = SweepAxis::Separation;
  std::vector<double> grid;
  ScenarioSpec fixed;
  QuadratureSpec quad;
  /// Separation used when the axis is thickness or porosity.
  double gap_nm = 1000.0;

  void validate() const;
};

struct SweepRow {
  double axis_value = 0.0;
  double pressure_pa = 0.0;
  double ideal_pressure_pa = 0.0;
  double reduction_factor = 0.0;
  QuadratureDiagnostics diagnostics;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::Separation;
  std::vector<SweepRow> rows;
};

struct ComparisonRow {
  double axis_value = 0.0;
  double reduction_a = 0.0;
  double reduction_b = 0.0;
  double ratio = 0.0;  // reduction_a / reduction_b
};

/// Layers thinner than or equal to zero are omitted.
GapConfig build_scenario(const ScenarioSpec& spec, double gap_nm);

/// Aerogel effective medium of `spec` (silica host, air fraction = porosity).
DielectricModel aerogel_model(const ScenarioSpec& spec);

/// `count` log-spaced points on [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int count);
std::vector<double> linear_grid(double lo, double hi, int count);
/// 40 log-spaced separations over 100-2000 nm.
std::vector<double> default_separation_grid();

/// Scenario with the axis parameter applied; returns (spec, separation).
std::pair<ScenarioSpec, double> apply_axis(const SweepSpec& sweep, double value);

SweepResult run_sweep(const SweepSpec& sweep, Parallelism par = Parallelism::from_env());

std::vector<ComparisonRow> compare_scenarios(const SweepResult& a, const SweepResult& b);
std::vector<ComparisonRow> compare_scenarios(const SweepSpec& a, const SweepSpec& b,
                                             Parallelism par = Parallelism::from_env());

enum class ControlAxis { Porosity, Thickness };

/// Bisection on the control value until |F_r - target| < tol. The bracket must
/// straddle the target; otherwise InfeasibleTargetError carries both endpoint
/// values of F_r.
double solve_for_target(ControlAxis axis, double target_fr, std::pair<double, double> bracket,
                        const ScenarioSpec& fixed, double gap_nm, const QuadratureSpec& quad, double tol,
                        Parallelism par = Parallelism::from_env());

std::string to_string(ScenarioKind kind);
std::string to_string(SweepAxis axis);

}  // namespace casimir::scenarios
