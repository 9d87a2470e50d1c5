// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "udn/power.hpp"

using namespace udn;

namespace {
Scenario reference_scenario(double lambda) {
  Scenario s;
  s.pathloss = PathLossParams::from_db(103.8, 2.09, 145.4, 3.75);
  s.los = LosProbabilityModel::exp_square(0.0825);
  s.lambda = lambda;
  return s;
}
}  // namespace

TEST_CASE("noise power over the working bandwidth") {
  PowerSearchConfig cfg;
  // -174 + 10 log10(10 MHz) + 9 = -95 dBm
  CHECK(noise_power_dbm(cfg, 1) == doctest::Approx(-95.0).epsilon(1e-12));
  // reuse 2 halves the bandwidth: 3.01 dB lower
  CHECK(noise_power_dbm(cfg, 2) ==
        doctest::Approx(-95.0 - 10.0 * std::log10(2.0)).epsilon(1e-12));
  cfg.bandwidth_hz = 1.0;
  cfg.noise_figure_db = 0.0;
  CHECK(noise_power_dbm(cfg, 1) == doctest::Approx(-174.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
  PowerSearchConfig cfg;
  cfg.validate();
  cfg.steps_db = {1.0, 1.0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.steps_db = {1.0, -0.5};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.steps_db = {0.2, 1.0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = PowerSearchConfig{};
  cfg.delta_theta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("a slack tolerance is satisfied at the noise floor") {
  PowerSearchConfig cfg;
  cfg.gamma_th = std::pow(10.0, -0.8);
  cfg.delta_theta = 0.999;
  const PowerResult r = min_tx_power(reference_scenario(100.0), cfg);
  CHECK(r.p_tx_dbm == doctest::Approx(noise_power_dbm(cfg, 1)).epsilon(1e-12));
  CHECK(r.iterations == 0);
}

TEST_CASE("search converges and tightening the tolerance needs more power") {
  PowerSearchConfig cfg;
  cfg.gamma_th = std::pow(10.0, -0.8);
  const Scenario scn = reference_scenario(100.0);

  double prev_power = -1e9;
  for (double tol : {1e-1, 1e-2, 1e-3}) {
    cfg.delta_theta = tol;
    const PowerResult r = min_tx_power(scn, cfg);
    CHECK(std::abs(r.theta_achieved - r.theta_star) <= tol + 1e-12);
    CHECK(r.p_tx_dbm >= prev_power - 1e-9);
    prev_power = r.p_tx_dbm;
  }
  // the final answer sits above the noise floor (power is actually needed)
  CHECK(prev_power > noise_power_dbm(cfg, 1));
}

TEST_CASE("zero-noise outage matches the direct computation") {
  PowerSearchConfig cfg;
  cfg.gamma_th = std::pow(10.0, -0.8);
  Scenario scn = reference_scenario(100.0);
  const PowerResult r = min_tx_power(scn, cfg);
  scn.sigma2 = 0.0;
  CHECK(r.theta_star ==
        doctest::Approx(outage(scn, cfg.gamma_th)).epsilon(1e-4));
  CHECK(r.theta_achieved >= r.theta_star - 1e-9);
}

TEST_CASE("denser networks need less power") {
  PowerSearchConfig cfg;
  cfg.gamma_th = std::pow(10.0, -0.8);
  const PowerResult sparse = min_tx_power(reference_scenario(10.0), cfg);
  const PowerResult dense = min_tx_power(reference_scenario(1000.0), cfg);
  CHECK(dense.p_tx_dbm < sparse.p_tx_dbm);
}
