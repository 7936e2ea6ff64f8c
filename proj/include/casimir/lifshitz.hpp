#pragma once

// Zero-temperature Lifshitz pressure between two planar stacks.
//
// The double integral over imaginary frequency and transverse wavevector is
//
//   F = -(hbar c / 2 pi^2) int_0^inf dq int_0^inf Q dQ k (g_s + g_p),
//   g = x / (1 - x),  x = r_left r_right exp(-2 k L),  k = sqrt(q^2 + Q^2),
//
// with q = xi / hbar c. Attraction is negative; the reduction factor F / F_c is
// positive for attractive configurations.

#include "casimir/optics.hpp"
#include "casimir/parallel.hpp"

namespace casimir::lifshitz {

using optics::ReflectionPair;
using optics::Stack;

struct GapConfig {
  Stack left;
  Stack right;
  double gap_nm = 100.0;

  void validate() const;
};

enum class XiMapping { RationalCompression };

struct QuadratureSpec {
  int xi_nodes = 64;
  int q_nodes = 64;
  XiMapping xi_mapping = XiMapping::RationalCompression;
  double cutoff_scale = 1.0;  // mapping scale is cutoff_scale / L
  double target_rel_tol = 1e-4;
  int max_nodes = 1024;       // refinement ceiling per axis

  void validate() const;
  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

struct RoundTripFactor {
  double g_s = 0.0;
  double g_p = 0.0;
};

struct QuadratureDiagnostics {
  int xi_nodes = 0;
  int q_nodes = 0;
  double rel_err_estimate = 0.0;  // |F(n) - F(2n)| / |F(2n)|
  int refinements = 0;
};

struct ForceResult {
  double pressure_pa = 0.0;
  double ideal_pressure_pa = 0.0;
  double reduction_factor = 0.0;
  QuadratureDiagnostics diagnostics;
};

/// -hbar c pi^2 / (240 L^4) in Pa.
double casimir_ideal(double gap_nm);

RoundTripFactor round_trip(const ReflectionPair& left, const ReflectionPair& right, double k_vac, double gap_nm);

/// Pressure at the requested node counts; the error estimate comes from a run at
/// doubled counts. Node counts are doubled until the estimate meets the target or
/// max_nodes is exceeded (ConvergenceError).
ForceResult casimir_pressure(const GapConfig& config, const QuadratureSpec& quad,
                             Parallelism par = Parallelism::from_env());

double reduction_factor(const GapConfig& config, const QuadratureSpec& quad,
                        Parallelism par = Parallelism::from_env());

/// Single-resolution evaluation in (xi, Q) variables, Pa. No error control.
double pressure_fixed_nodes(const GapConfig& config, const QuadratureSpec& quad, int xi_nodes, int q_nodes,
                            Parallelism par = Parallelism::from_env());

/// Independent evaluation in (Q, k) variables with weight k^2 / q over k > Q,
/// using k = Q + t^2 to remove the q -> 0 endpoint singularity. Cross-check only:
/// permittivities are re-evaluated at every node. Pa.
double pressure_qk_form(const GapConfig& config, int q_nodes, int t_nodes, double cutoff_scale = 1.0,
                        Parallelism par = Parallelism::from_env());

}  // namespace casimir::lifshitz
