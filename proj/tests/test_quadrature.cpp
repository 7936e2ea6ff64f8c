#include <doctest.h>

#include <cmath>
#include <numeric>

#include "casimir/quadrature.hpp"

using namespace casimir::quadrature;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  for (int n : {1, 2, 5, 16, 64, 257}) {
    const Rule r = gauss_legendre(n, 0.0, 2.0);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int deg = 0; deg <= std::min(2 * n - 1, 30); ++deg) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += r.weights[i] * std::pow(r.nodes[i], deg);
      CHECK(sum == doctest::Approx(std::pow(2.0, deg + 1) / (deg + 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("gauss-legendre nodes are ordered inside the interval") {
  const Rule r = gauss_legendre(128, -1.0, 1.0);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    CHECK(r.nodes[i] > -1.0);
    CHECK(r.nodes[i] < 1.0);
    CHECK(r.weights[i] > 0.0);
    if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
  }
  CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("semi-infinite rule") {
  const Rule r = semi_infinite(64, 3.0);
  double exp_int = 0.0, lorentzian = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    CHECK(r.nodes[i] > 0.0);
    exp_int += r.weights[i] * std::exp(-r.nodes[i] / 3.0);
    lorentzian += r.weights[i] / (1.0 + r.nodes[i] * r.nodes[i]);
  }
  CHECK(exp_int == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(lorentzian == doctest::Approx(M_PI / 2).epsilon(1e-6));
}
