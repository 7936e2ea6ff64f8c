#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "test_support.hpp"

using namespace casimir;
using namespace casimir::materials;
using casimir::test::geometric;
using casimir::test::rel_diff;

TEST_CASE("drude permittivity") {
  CHECK(eps_drude({9.0, 0.0}, 9.0) == 2.0);
  CHECK(eps_drude({9.0, 0.035}, 9.0) == doctest::Approx(1.99612617598229109).epsilon(1e-14));
  const double far = eps_drude({9.0, 0.035}, 1e6);
  CHECK(far > 1.0);
  CHECK(far - 1.0 < 1e-10);
  CHECK_THROWS_AS(eps_drude({9.0, 0.035}, 0.0), DomainError);
  CHECK_THROWS_AS(eps_drude({9.0, 0.035}, -1.0), DomainError);
  CHECK_THROWS_AS(DielectricModel::drude({-1.0, 0.0}), DomainError);
}

TEST_CASE("lorentz permittivity") {
  CHECK(eps_lorentz({}, 3.7) == 1.0);
  CHECK(eps_lorentz({{4.0, 2.0, 0.0}}, 0.0) == 2.0);
  CHECK(eps_lorentz({{1.0, 1.0, 0.1}}, 1.0) == doctest::Approx(1.47619047619047619).epsilon(1e-14));
  CHECK_THROWS(DielectricModel::lorentz({{-1.0, 1.0, 0.1}}));
  CHECK_THROWS(DielectricModel::lorentz({{1.0, 0.0, 0.1}}));
}

TEST_CASE("clausius-mossotti mixing") {
  CHECK(mix_clausius_mossotti(3.8, 1.0) == 1.0);
  CHECK(mix_clausius_mossotti(7.1, 1.0) == 1.0);
  CHECK(mix_clausius_mossotti(3.8, 0.0) == 3.8);
  const double eps = mix_clausius_mossotti(3.8, 0.9);
  CHECK(eps == doctest::Approx(1.21654676258992806).epsilon(1e-14));
  // Substitute back: air inclusions of fraction phi in the host.
  const double lhs = (eps - 3.8) / (eps + 7.6);
  const double rhs = 0.9 * (1.0 - 3.8) / (1.0 + 7.6);
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK_THROWS_AS(mix_clausius_mossotti(3.8, 1.2), DomainError);
  CHECK_THROWS_AS(mix_clausius_mossotti(3.8, -0.1), DomainError);
  CHECK_THROWS_AS(mix_clausius_mossotti(0.5, 0.5), UnsupportedMaterialError);
}

TEST_CASE("looyenga mixing") {
  CHECK(mix_looyenga(3.8, 1.0) == 1.0);
  CHECK(mix_looyenga(3.8, 0.0) == 3.8);
  // (0.9 + 0.1 * 3.8^(1/3))^3, evaluated in extended precision.
  CHECK(mix_looyenga(3.8, 0.9) == doctest::Approx(1.17774779976422717).epsilon(1e-14));
  CHECK_THROWS_AS(mix_looyenga(3.8, 1.5), DomainError);
  CHECK_THROWS_AS(mix_looyenga(0.9, 0.5), UnsupportedMaterialError);
}

TEST_CASE("mixing bounds and endpoints over random hosts") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> host(1.0, 50.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double es = host(rng);
    const double phi = frac(rng);
    for (MixingRule rule : {MixingRule::ClausiusMossotti, MixingRule::Looyenga}) {
      const double e = mix(rule, es, phi);
      CHECK(e >= 1.0);
      CHECK(e <= es);
      CHECK(mix(rule, es, 0.0) == es);
      CHECK(mix(rule, es, 1.0) == 1.0);
    }
  }
}

TEST_CASE("kk transform of a zero table is vacuum") {
  auto table = TabulatedEps2::from_points({{0.1, 0.0}, {1.0, 0.0}, {10.0, 0.0}});
  for (double xi : {1e-3, 1.0, 1e3}) CHECK(kk_to_imaginary_axis(table, xi) == 1.0);
}

TEST_CASE("kk transform reproduces a single oscillator at resonance") {
  const std::vector<LorentzOscillator> osc{{2.0, 1.0, 0.2}};
  const auto table = test::sample_lorentz(osc, 1e-4, 1e4, 2400);
  CHECK(rel_diff(kk_to_imaginary_axis(table, 1.0), eps_lorentz(osc, 1.0)) < 1e-3);
}

TEST_CASE("kk transform approaches one from above at large xi") {
  const auto table = test::sample_lorentz({{2.0, 1.0, 0.2}}, 1e-2, 1e2, 400);
  double prev = kk_to_imaginary_axis(table, 1e2);
  for (double xi : {1e3, 1e4, 1e5, 1e6}) {
    const double e = kk_to_imaginary_axis(table, xi);
    CHECK(e > 1.0);
    CHECK(e <= prev);
    prev = e;
  }
  CHECK(prev - 1.0 < 1e-6);
}

TEST_CASE("kk oracle property over random lorentz sums") {
  std::mt19937_64 rng(7);
  const auto xis = geometric(1e-2, 1e2, 41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto osc = test::random_oscillators(rng);
    const auto table = test::sample_lorentz(osc, 1e-4, 1e4, 2000);
    double worst = 0.0;
    for (double xi : xis) worst = std::max(worst, rel_diff(kk_to_imaginary_axis(table, xi), eps_lorentz(osc, xi)));
    CHECK_MESSAGE(worst < 1e-3, "trial " << trial);
  }
}

TEST_CASE("kk transform rejects empty tables") {
  CHECK_THROWS_AS(kk_to_imaginary_axis(TabulatedEps2::from_points({}), 1.0), InputError);
}

TEST_CASE("tabulated points are validated") {
  CHECK_THROWS_AS(TabulatedEps2::from_points({{1.0, 0.1}, {1.0, 0.2}}), FormatError);
  CHECK_THROWS_AS(TabulatedEps2::from_points({{2.0, 0.1}, {1.0, 0.2}}), FormatError);
  CHECK_THROWS_AS(TabulatedEps2::from_points({{0.0, 0.1}, {1.0, 0.2}}), FormatError);
  CHECK_THROWS_AS(TabulatedEps2::from_points({{1.0, -0.1}, {2.0, 0.2}}), PassivityError);
}

TEST_CASE("optical table loading") {
  SUBCASE("two-line eps2 table") {
    std::istringstream in("energy_eV,eps2\n1.0,0.5\n2.0,0.3\n");
    const auto t = load_optical_table(in, TableFormat::Eps2);
    REQUIRE(t.size() == 2);
    CHECK(t.points()[0] == TabulatedEps2::Point{1.0, 0.5});
    CHECK(t.points()[1] == TabulatedEps2::Point{2.0, 0.3});
  }
  SUBCASE("nk row gives 2nk") {
    std::istringstream in("energy_eV,n,k\n1.0,1.5,0.2\n");
    const auto t = load_optical_table(in, TableFormat::NK);
    REQUIRE(t.size() == 1);
    CHECK(t.points()[0].eps2 == doctest::Approx(0.6).epsilon(1e-15));
  }
  SUBCASE("comments become provenance") {
    std::istringstream in("# measured 2019\n# sample B\nenergy_eV,eps2\n1,0\n");
    CHECK(load_optical_table(in, TableFormat::Eps2).provenance() == "measured 2019\nsample B");
  }
  SUBCASE("out-of-order energies name the line") {
    std::istringstream in("energy_eV,eps2\n1.0,0.5\n3.0,0.3\n2.0,0.1\n");
    try {
      load_optical_table(in, TableFormat::Eps2);
      FAIL("expected a format error");
    } catch (const FormatError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
  }
  SUBCASE("duplicate energies") {
    std::istringstream in("energy_eV,eps2\n1.0,0.5\n1.0,0.3\n");
    CHECK_THROWS_AS(load_optical_table(in, TableFormat::Eps2), FormatError);
  }
  SUBCASE("negative values are passivity errors") {
    std::istringstream a("energy_eV,eps2\n1.0,-0.5\n");
    CHECK_THROWS_AS(load_optical_table(a, TableFormat::Eps2), PassivityError);
    std::istringstream b("energy_eV,n,k\n1.0,1.5,-0.1\n");
    CHECK_THROWS_AS(load_optical_table(b, TableFormat::NK), PassivityError);
    std::istringstream c("energy_eV,n,k\n1.0,-1.5,0.1\n");
    CHECK_THROWS_AS(load_optical_table(c, TableFormat::NK), PassivityError);
  }
  SUBCASE("structural problems") {
    std::istringstream no_header("1.0,0.5\n");
    CHECK_THROWS_AS(load_optical_table(no_header, TableFormat::Eps2), FormatError);
    std::istringstream wrong_header("energy_eV,n,k\n1.0,1,0\n");
    CHECK_THROWS_AS(load_optical_table(wrong_header, TableFormat::Eps2), FormatError);
    std::istringstream bad_number("energy_eV,eps2\n1.0,abc\n");
    CHECK_THROWS_AS(load_optical_table(bad_number, TableFormat::Eps2), FormatError);
    std::istringstream columns("energy_eV,eps2\n1.0,0.5,0.2\n");
    CHECK_THROWS_AS(load_optical_table(columns, TableFormat::Eps2), FormatError);
    std::istringstream empty("energy_eV,eps2\n");
    CHECK_THROWS_AS(load_optical_table(empty, TableFormat::Eps2), InputError);
  }
}

namespace {

std::vector<DielectricModel> sample_models() {
  const auto table = test::sample_lorentz({{3.0, 2.0, 0.4}, {0.5, 0.1, 0.02}}, 1e-3, 1e3, 800);
  return {
      DielectricModel::vacuum(),
      drude_gold(),
      DielectricModel::drude({5.0, 0.5}),
      silica_surrogate(),
      DielectricModel::lorentz({{1.0, 1.0, 0.1}}),
      DielectricModel::tabulated(table),
      DielectricModel::tabulated(table, {LowEnergyExtrapolation::None, HighEnergyTail::None}),
      DielectricModel::mixed(silica_surrogate(), 0.9, MixingRule::ClausiusMossotti),
      DielectricModel::mixed(silica_surrogate(), 0.5, MixingRule::Looyenga),
      DielectricModel::mixed(DielectricModel::tabulated(table), 0.3, MixingRule::ClausiusMossotti),
  };
}

}  // namespace

TEST_CASE("every model is non-increasing in xi and at least one") {
  const auto grid = geometric(1e-3, 1e3, 60);
  for (const auto& model : sample_models()) {
    CAPTURE(model.describe());
    double prev = HUGE_VAL;
    for (double xi : grid) {
      const double e = model.at(xi);
      CHECK(e >= 1.0);
      CHECK(e <= prev);
      prev = e;
    }
  }
}

TEST_CASE("model evaluation is deterministic") {
  for (const auto& model : sample_models())
    for (double xi : {1e-3, 0.37, 12.0}) CHECK(model.at(xi) == model.at(xi));
}

TEST_CASE("mixed model equals mixing its host") {
  const auto host = silica_surrogate();
  const auto mixed = DielectricModel::mixed(host, 0.9, MixingRule::ClausiusMossotti);
  for (double xi : {0.01, 1.0, 20.0}) CHECK(mixed.at(xi) == mix_clausius_mossotti(host.at(xi), 0.9));
  CHECK_THROWS_AS(DielectricModel::mixed(host, 1.1, MixingRule::Looyenga), DomainError);
}

TEST_CASE("silica surrogate static permittivity") {
  const double e0 = silica_surrogate().at(1e-6);
  CHECK(e0 > 4.0);
  CHECK(e0 < 4.6);
  CHECK(silica_surrogate().at(1.0) == doctest::Approx(2.30).epsilon(0.05));
}
