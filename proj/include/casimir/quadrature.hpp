#pragma once

#include <vector>

namespace casimir::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on (a, b).
Rule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Gauss-Legendre on (0, inf) through x = s u / (1 - u), u in (0, 1). The
/// returned weights include the Jacobian s / (1 - u)^2.
Rule semi_infinite(int n, double scale);

}  // namespace casimir::quadrature
