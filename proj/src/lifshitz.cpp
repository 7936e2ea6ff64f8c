#include "casimir/lifshitz.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::lifshitz {

namespace {

double round_trip_term(double r_left, double r_right, double attenuation) {
  const double x = r_left * r_right * attenuation;
  if (x >= 1.0) {
    std::ostringstream os;
    os << "round-trip factor reached " << x << " (needs |r1 r2 exp(-2kL)| < 1)";
    throw SingularityError(os.str());
  }
  return x / (1.0 - x);
}

// Sums partial[i] in index order.
double ordered_sum(const std::vector<double>& partial) {
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace

void GapConfig::validate() const {
  if (!(gap_nm > 0.0) || !std::isfinite(gap_nm)) {
    std::ostringstream os;
    os << "gap must be positive, got " << gap_nm << " nm";
    throw DomainError(os.str());
  }
  left.validate();
  right.validate();
}

void QuadratureSpec::validate() const {
  if (xi_nodes < 8 || q_nodes < 8) throw DomainError("quadrature node counts must be at least 8");
  if (max_nodes < xi_nodes || max_nodes < q_nodes)
    throw DomainError("max_nodes must not be smaller than the starting node counts");
  if (!(cutoff_scale > 0.0) || !std::isfinite(cutoff_scale))
    throw DomainError("cutoff_scale must be positive");
  if (!(target_rel_tol > 0.0)) throw DomainError("target_rel_tol must be positive");
}

double casimir_ideal(double gap_nm) {
  if (!(gap_nm > 0.0) || !std::isfinite(gap_nm)) {
    std::ostringstream os;
    os << "casimir_ideal: gap must be positive, got " << gap_nm << " nm";
    throw DomainError(os.str());
  }
  const double l2 = gap_nm * gap_nm;
  return -kHbarC * kPi * kPi / (240.0 * l2 * l2) * kPascalPerEvNm3;
}

RoundTripFactor round_trip(const ReflectionPair& left, const ReflectionPair& right, double k_vac, double gap_nm) {
  const double attenuation = std::exp(-2.0 * k_vac * gap_nm);
  return {round_trip_term(left.r_s, right.r_s, attenuation), round_trip_term(left.r_p, right.r_p, attenuation)};
}

double pressure_fixed_nodes(const GapConfig& config, const QuadratureSpec& quad, int xi_nodes, int q_nodes,
                            Parallelism par) {
  const double scale = quad.cutoff_scale / config.gap_nm;
  const quadrature::Rule q_rule = quadrature::semi_infinite(xi_nodes, scale);
  const quadrature::Rule par_rule = quadrature::semi_infinite(q_nodes, scale);
  const double gap = config.gap_nm;

  std::vector<double> partial(q_rule.nodes.size(), 0.0);
  parallel_for(
      q_rule.nodes.size(),
      [&](std::size_t i) {
        const double q = q_rule.nodes[i];
        const double xi = q * kHbarC;
        // Permittivities depend on xi only; evaluate once per frequency node.
        const auto eps_left = optics::evaluate_permittivity(config.left, xi);
        const auto eps_right = optics::evaluate_permittivity(config.right, xi);
        double inner = 0.0;
        for (std::size_t j = 0; j < par_rule.nodes.size(); ++j) {
          const auto point = optics::SpectralPoint::make(xi, par_rule.nodes[j]);
          const auto r_left = optics::stack_reflection(config.left, eps_left, point);
          const auto r_right = optics::stack_reflection(config.right, eps_right, point);
          const auto g = round_trip(r_left, r_right, point.k_vac, gap);
          inner += par_rule.weights[j] * point.q_par * point.k_vac * (g.g_s + g.g_p);
        }
        partial[i] = q_rule.weights[i] * inner;
      },
      par);

  const double integral = ordered_sum(partial);
  return -kHbarC / (2.0 * kPi * kPi) * integral * kPascalPerEvNm3;
}

ForceResult casimir_pressure(const GapConfig& config, const QuadratureSpec& quad, Parallelism par) {
  config.validate();
  quad.validate();

  int nx = quad.xi_nodes;
  int nq = quad.q_nodes;
  double coarse = pressure_fixed_nodes(config, quad, nx, nq, par);
  int refinements = 0;
  while (true) {
    const double fine = pressure_fixed_nodes(config, quad, 2 * nx, 2 * nq, par);
    const double rel = fine == 0.0 ? std::abs(coarse) : std::abs(fine - coarse) / std::abs(fine);
    if (rel <= quad.target_rel_tol) {
      ForceResult out;
      out.pressure_pa = coarse == 0.0 ? 0.0 : coarse;
      out.ideal_pressure_pa = casimir_ideal(config.gap_nm);
      out.reduction_factor = out.pressure_pa / out.ideal_pressure_pa;
      if (out.reduction_factor == 0.0) out.reduction_factor = 0.0;
      out.diagnostics = {nx, nq, rel, refinements};
      return out;
    }
    if (2 * nx > quad.max_nodes || 2 * nq > quad.max_nodes) {
      std::ostringstream os;
      os << "Lifshitz quadrature did not reach rel. tol " << quad.target_rel_tol << " at L=" << config.gap_nm
         << " nm (estimate " << rel << " with " << nx << "x" << nq << " nodes, max " << quad.max_nodes << ")";
      throw ConvergenceError(os.str(), nx, nq, rel);
    }
    nx *= 2;
    nq *= 2;
    coarse = fine;
    ++refinements;
  }
}

double reduction_factor(const GapConfig& config, const QuadratureSpec& quad, Parallelism par) {
  return casimir_pressure(config, quad, par).reduction_factor;
}

double pressure_qk_form(const GapConfig& config, int q_nodes, int t_nodes, double cutoff_scale, Parallelism par) {
  config.validate();
  const double gap = config.gap_nm;
  const double scale = cutoff_scale / gap;
  const quadrature::Rule par_rule = quadrature::semi_infinite(q_nodes, scale);
  const quadrature::Rule t_rule = quadrature::semi_infinite(t_nodes, std::sqrt(scale));

  std::vector<double> partial(par_rule.nodes.size(), 0.0);
  parallel_for(
      par_rule.nodes.size(),
      [&](std::size_t i) {
        const double big_q = par_rule.nodes[i];
        double inner = 0.0;
        for (std::size_t j = 0; j < t_rule.nodes.size(); ++j) {
          // k = Q + t^2:  dk k^2 / q  =  2 k^2 / sqrt(2Q + t^2) dt
          const double t = t_rule.nodes[j];
          const double k = big_q + t * t;
          const double root = std::sqrt(2.0 * big_q + t * t);
          const double q = t * root;
          const double xi = q * kHbarC;
          const optics::SpectralPoint point{xi, big_q, k};
          const auto r_left = optics::stack_reflection(config.left, point);
          const auto r_right = optics::stack_reflection(config.right, point);
          const auto g = round_trip(r_left, r_right, k, gap);
          inner += t_rule.weights[j] * 2.0 * k * k / root * (g.g_s + g.g_p);
        }
        partial[i] = par_rule.weights[i] * big_q * inner;
      },
      par);

  return -kHbarC / (2.0 * kPi * kPi) * ordered_sum(partial) * kPascalPerEvNm3;
}

}  // namespace casimir::lifshitz
