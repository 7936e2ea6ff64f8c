#include "casimir/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "casimir/errors.hpp"

namespace casimir::quadrature {

Rule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double tol = 4.0 * std::numeric_limits<double>::epsilon();

  // P_n(x) and P_n'(x) by the three-term recurrence.
  const auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };

  // Roots are symmetric; Newton from the Tricomi initial guess.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= tol) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

Rule semi_infinite(int n, double scale) {
  if (!(scale > 0.0)) throw DomainError("semi-infinite mapping scale must be positive");
  Rule rule = gauss_legendre(n, 0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    const double u = rule.nodes[i];
    const double one_minus = 1.0 - u;
    rule.nodes[i] = scale * u / one_minus;
    rule.weights[i] *= scale / (one_minus * one_minus);
  }
  return rule;
}

}  // namespace casimir::quadrature
