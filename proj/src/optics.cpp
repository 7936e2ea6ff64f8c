#include "casimir/optics.hpp"

#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::optics {

namespace {

// Both polarizations from a precomputed pair of wavevectors.
ReflectionPair interface(double eps_i, double kappa_i, double eps_j, double kappa_j) {
  return {(kappa_i - kappa_j) / (kappa_i + kappa_j),
          (eps_j * kappa_i - eps_i * kappa_j) / (eps_j * kappa_i + eps_i * kappa_j)};
}

double compose(double r_top, double r_below, double decay) {
  const double tail = r_below * decay;
  return (r_top + tail) / (1.0 + r_top * tail);
}

}  // namespace

Stack Stack::half_space(DielectricModel substrate) {
  Stack s;
  s.substrate = std::move(substrate);
  return s;
}

Stack Stack::ideal_mirror() {
  Stack s;
  s.fixed_reflection = ReflectionPair{-1.0, 1.0};
  return s;
}

void Stack::validate() const {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!(layers[i].thickness_nm > 0.0) || !std::isfinite(layers[i].thickness_nm)) {
      std::ostringstream os;
      os << "layer " << i << " thickness must be positive, got " << layers[i].thickness_nm << " nm";
      throw DomainError(os.str());
    }
  }
}

SpectralPoint SpectralPoint::make(double xi_ev, double q_par) {
  const double q = xi_ev / kHbarC;
  return {xi_ev, q_par, std::sqrt(q * q + q_par * q_par)};
}

double SpectralPoint::q_vac() const { return xi_ev / kHbarC; }

double medium_wavevector(double eps, const SpectralPoint& point) {
  const double q = point.q_vac();
  return std::sqrt(eps * q * q + point.q_par * point.q_par);
}

ReflectionPair fresnel(double eps_i, double eps_j, const SpectralPoint& point) {
  if (eps_i == eps_j) return {0.0, 0.0};
  return interface(eps_i, medium_wavevector(eps_i, point), eps_j, medium_wavevector(eps_j, point));
}

double optical_length(const Layer& layer, const SpectralPoint& point) {
  return layer.thickness_nm * medium_wavevector(layer.material.at(point.xi_ev), point);
}

ReflectionPair slab_reflection(const Layer& layer, const DielectricModel& substrate, const SpectralPoint& point) {
  Stack s;
  s.layers.push_back(layer);
  s.substrate = substrate;
  return stack_reflection(s, point);
}

StackPermittivity evaluate_permittivity(const Stack& stack, double xi_ev) {
  StackPermittivity eps;
  if (stack.fixed_reflection) return eps;
  eps.layers.reserve(stack.layers.size());
  for (const auto& layer : stack.layers) eps.layers.push_back(layer.material.at(xi_ev));
  eps.substrate = stack.substrate.at(xi_ev);
  return eps;
}

ReflectionPair stack_reflection(const Stack& stack, const SpectralPoint& point) {
  stack.validate();
  return stack_reflection(stack, evaluate_permittivity(stack, point.xi_ev), point);
}

ReflectionPair stack_reflection(const Stack& stack, const StackPermittivity& eps, const SpectralPoint& point) {
  if (stack.fixed_reflection) return *stack.fixed_reflection;

  const std::size_t n = stack.layers.size();
  const double kappa_sub = medium_wavevector(eps.substrate, point);
  if (n == 0) return interface(1.0, point.k_vac, eps.substrate, kappa_sub);

  // Fold from the substrate outward; r is the reflection seen from inside layer i.
  double kappa_i = medium_wavevector(eps.layers[n - 1], point);
  ReflectionPair r = interface(eps.layers[n - 1], kappa_i, eps.substrate, kappa_sub);
  for (std::size_t i = n; i-- > 0;) {
    const double eps_above = i == 0 ? 1.0 : eps.layers[i - 1];
    const double kappa_above = i == 0 ? point.k_vac : medium_wavevector(eps_above, point);
    const ReflectionPair top = interface(eps_above, kappa_above, eps.layers[i], kappa_i);
    const double decay = std::exp(-2.0 * stack.layers[i].thickness_nm * kappa_i);
    r = {compose(top.r_s, r.r_s, decay), compose(top.r_p, r.r_p, decay)};
    kappa_i = kappa_above;
  }
  return r;
}

}  // namespace casimir::optics
