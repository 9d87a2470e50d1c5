// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "udn/energy.hpp"

using namespace udn;

TEST_CASE("total power reference value") {
  PowerConsumptionModel m;  // P0 = 10 W, K_RF = 10, rho = 0.5
  // 100 BS/km^2 over 1 km^2, all active, 1 W each:
  // 100*10 + 100*1*10 + 0 = 2000 W
  CHECK(total_power(m, 1.0, 100.0, 100.0, 1.0) ==
        doctest::Approx(2000.0).epsilon(1e-12));
  // half active: 50*10 + 50*1*10 + 50*0.5*10 = 1250 W
  CHECK(total_power(m, 1.0, 100.0, 50.0, 1.0) ==
        doctest::Approx(1250.0).epsilon(1e-12));
  // area scales linearly
  CHECK(total_power(m, 2.0, 100.0, 50.0, 1.0) ==
        doctest::Approx(2500.0).epsilon(1e-12));
  CHECK_THROWS_AS(total_power(m, 1.0, 100.0, 101.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("energy efficiency is throughput per watt") {
  CHECK(energy_efficiency(1e8, 2000.0) == doctest::Approx(5e4));
  CHECK_THROWS_AS(energy_efficiency(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("power-law fit recovers an exact power law") {
  std::vector<std::pair<double, double>> pts;
  for (double z = 1.0; z <= 1e4; z *= 3.0) pts.push_back({z, 3.0 * z * z});
  const PowerLawFit fit = fit_power_law(pts, 1.0, 1e4);
  CHECK(fit.a == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.b == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.residual < 1e-12);

  // window restriction really filters points
  std::vector<std::pair<double, double>> mixed = pts;
  mixed.push_back({1e6, 1.0});  // off-law point outside the window
  const PowerLawFit fit2 = fit_power_law(mixed, 1.0, 1e4);
  CHECK(fit2.b == doctest::Approx(2.0).epsilon(1e-10));

  CHECK_THROWS_AS(fit_power_law({{1.0, 2.0}}, 0.5, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({{1.0, -2.0}, {2.0, 3.0}}, 0.5, 3.0),
                  std::invalid_argument);
}

TEST_CASE("regime classification by exponent signs") {
  using K = RegimeClassification::Kind;
  // alpha >= 1: every density increase pays for itself
  CHECK(classify_regime(1.2, -0.5).kind == K::MonotoneIncreasing);
  // alpha < 1 + delta: throughput growth never catches the power bill
  CHECK(classify_regime(0.3, -0.5).kind == K::MonotoneDecreasing);
  // 1 + delta < alpha < 1: optimum at finite density
  CHECK(classify_regime(0.8, -0.5).kind == K::InteriorMaximum);
  CHECK(classify_regime(0.5, -0.5).kind == K::DegenerateBoundary);
  // alpha < 1 with strongly decaying power: interior optimum
  const auto r = classify_regime(0.48, -3.9, 10.0, 10.0, 4.4e-17);
  CHECK(r.kind == K::InteriorMaximum);
  CHECK(r.lambda0 > 0.0);
}

TEST_CASE("closed-form full-load optimum at the reference constants") {
  // alpha = 0.48, delta = -3.9, P0 = 10 W, K_RF = 10, P_T = 4.4e-17 W
  const double lam0 = optimal_density_full(0.48, -3.9, 10.0, 10.0, 4.4e-17);
  const double expected =
      std::pow(10.0 * 0.52 / (10.0 * 4.4e-17 * (0.48 + 3.9 - 1.0)),
               1.0 / -3.9);
  CHECK(lam0 == doctest::Approx(expected).epsilon(1e-12));
  // about 1e-4 BS/m^2, i.e. ~100 BS/km^2
  CHECK(lam0 * 1e6 > 30.0);
  CHECK(lam0 * 1e6 < 300.0);
}

TEST_CASE("full-load optimum scaling symmetries") {
  const double base = optimal_density_full(0.48, -3.9, 10.0, 10.0, 4.4e-17);
  // scaling P0 and P_T together leaves the optimum unchanged
  CHECK(optimal_density_full(0.48, -3.9, 50.0, 10.0, 5.0 * 4.4e-17) ==
        doctest::Approx(base).epsilon(1e-12));
  // cheaper TX power (smaller P_T) lowers the crossover density:
  // lambda0^delta grows with 1/P_T and delta < 0
  CHECK(optimal_density_full(0.48, -3.9, 10.0, 10.0, 4.4e-18) < base);
}

TEST_CASE("partial-load optimum") {
  // alpha = 0.46, lambda_U = 1000, rho = 0.1:
  // lambda* = 0.46*1000*0.9 / (0.1*0.54) = 7666.7
  const PartialOptimum opt = optimal_density_partial(0.46, 1000.0, 0.1);
  CHECK(opt.lambda_star == doctest::Approx(7666.6667).epsilon(1e-4));
  CHECK(opt.reliable);  // 7666.7 > 3 * 1000

  const PartialOptimum low = optimal_density_partial(0.46, 1000.0, 0.5);
  CHECK(low.lambda_star == doctest::Approx(851.85185).epsilon(1e-4));
  CHECK_FALSE(low.reliable);

  // scale equivariance in lambda_U
  CHECK(optimal_density_partial(0.46, 2000.0, 0.1).lambda_star ==
        doctest::Approx(2.0 * opt.lambda_star).epsilon(1e-12));

  CHECK_THROWS_AS(optimal_density_partial(1.2, 1000.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_density_partial(0.5, 1000.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("consumption model validation") {
  PowerConsumptionModel m;
  m.validate();
  m.rho = 1.5;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m.rho = 0.5;
  m.p0_watts = -1.0;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}
