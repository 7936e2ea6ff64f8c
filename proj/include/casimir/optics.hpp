#pragma once

// Reflection amplitudes of planar stacks at imaginary frequency. Everything here
// is real-valued: the rotated-axis wavevectors are real and positive.

#include <optional>
#include <span>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::optics {

using materials::DielectricModel;

struct Layer {
  double thickness_nm = 0.0;
  DielectricModel material;
};

/// Reflection seen from the gap side.
struct ReflectionPair {
  double r_s = 0.0;
  double r_p = 0.0;
  friend bool operator==(const ReflectionPair&, const ReflectionPair&) = default;
};

/// Layers are ordered outermost (gap-facing) first and sit on `substrate`.
/// `fixed_reflection`, when set, overrides the layered response entirely.
struct Stack {
  std::vector<Layer> layers;
  DielectricModel substrate;
  std::optional<ReflectionPair> fixed_reflection;

  static Stack half_space(DielectricModel substrate);
  /// Perfect conductor: r_s = -1, r_p = +1.
  static Stack ideal_mirror();

  void validate() const;
};

struct SpectralPoint {
  double xi_ev = 0.0;  // imaginary frequency as photon energy
  double q_par = 0.0;  // transverse wavevector Q, nm^-1
  double k_vac = 0.0;  // sqrt(q^2 + Q^2), q = xi / hbar c

  static SpectralPoint make(double xi_ev, double q_par);
  double q_vac() const;
};

/// Permittivities of one stack's layers and substrate at a single xi.
struct StackPermittivity {
  std::vector<double> layers;
  double substrate = 1.0;
};

double medium_wavevector(double eps, const SpectralPoint& point);
ReflectionPair fresnel(double eps_i, double eps_j, const SpectralPoint& point);
double optical_length(const Layer& layer, const SpectralPoint& point);
ReflectionPair slab_reflection(const Layer& layer, const DielectricModel& substrate, const SpectralPoint& point);
ReflectionPair stack_reflection(const Stack& stack, const SpectralPoint& point);

StackPermittivity evaluate_permittivity(const Stack& stack, double xi_ev);

/// Same fold as stack_reflection with permittivities already evaluated at point.xi_ev.
ReflectionPair stack_reflection(const Stack& stack, const StackPermittivity& eps, const SpectralPoint& point);

}  // namespace casimir::optics
