// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "udn/montecarlo.hpp"

using namespace udn;

namespace {

Scenario reference_scenario(double lambda) {
  Scenario s;
  s.pathloss = PathLossParams::from_db(103.8, 2.09, 145.4, 3.75);
  s.los = LosProbabilityModel::exp_square(0.0825);
  s.lambda = lambda;
  return s;
}

Scenario single_slope_scenario(double lambda, double beta) {
  Scenario s;
  s.pathloss = PathLossParams::single_slope(140.7, beta);
  s.los = LosProbabilityModel::constant(1.0);
  s.lambda = lambda;
  return s;
}

}  // namespace

TEST_CASE("bit-identical results across seeds and thread counts") {
  SimConfig cfg;
  cfg.scenario = reference_scenario(100.0);
  cfg.drops = 2000;
  cfg.seed = 7;
  const std::vector<double> th = {0.1, 1.0, 10.0};

  cfg.threads = 1;
  const EmpiricalStats a = simulate_sinr(cfg, th);
  cfg.threads = 4;
  const EmpiricalStats b = simulate_sinr(cfg, th);
  for (size_t i = 0; i < th.size(); ++i) CHECK(a.ccdf[i] == b.ccdf[i]);
  CHECK(a.mean_log2_rate == b.mean_log2_rate);

  cfg.seed = 8;
  const EmpiricalStats c = simulate_sinr(cfg, th);
  CHECK(c.ccdf[1] != a.ccdf[1]);  // different seed, different draws
}

TEST_CASE("beta=4 single slope matches the closed form") {
  SimConfig cfg;
  cfg.scenario = single_slope_scenario(100.0, 4.0);
  cfg.drops = 40000;
  cfg.seed = 1;
  const std::vector<double> th = {1.0};
  const EmpiricalStats st = simulate_sinr(cfg, th);
  const double expected = 1.0 / (1.0 + (M_PI / 2.0 - std::atan(1.0)));
  CHECK(std::abs(st.ccdf[0] - expected) < 3.0 * st.half_width[0]);
  CHECK(st.drops_used == 40000);
  CHECK(st.disk_radius_km > 0.0);
}

TEST_CASE("automatic disk radius shrinks with density") {
  const double sparse = auto_disk_radius(reference_scenario(10.0));
  const double dense = auto_disk_radius(reference_scenario(1000.0));
  CHECK(sparse > 0.0);
  CHECK(dense > 0.0);
  CHECK(dense <= sparse);
  // doubling the radius must not move the estimate (truncation check)
  SimConfig cfg;
  cfg.scenario = reference_scenario(100.0);
  cfg.drops = 30000;
  cfg.seed = 3;
  const std::vector<double> th = {std::pow(10.0, -0.8)};
  const EmpiricalStats base = simulate_sinr(cfg, th);
  cfg.disk_radius_km = 2.0 * base.disk_radius_km;
  const EmpiricalStats wide = simulate_sinr(cfg, th);
  CHECK(std::abs(base.ccdf[0] - wide.ccdf[0]) <
        3.0 * (base.half_width[0] + wide.half_width[0]));
}

TEST_CASE("huge reuse factor leaves only noise-free signal") {
  SimConfig cfg;
  cfg.scenario = reference_scenario(100.0);
  cfg.scenario.load = LoadModel::frequency_reuse(1000000000);
  cfg.drops = 3000;
  cfg.seed = 5;
  const EmpiricalStats st = simulate_sinr(cfg, {1e6});
  CHECK(st.ccdf[0] == doctest::Approx(1.0));  // SINR is infinite
}

TEST_CASE("reuse thinning never removes the serving BS") {
  SimConfig cfg;
  cfg.scenario = reference_scenario(50.0);
  cfg.scenario.load = LoadModel::frequency_reuse(4);
  cfg.drops = 5000;
  cfg.seed = 11;
  // with the serving cell always kept, SINR > 0 strictly; the ccdf at a
  // tiny threshold must be 1
  const EmpiricalStats st = simulate_sinr(cfg, {1e-12});
  CHECK(st.ccdf[0] == doctest::Approx(1.0));
}

TEST_CASE("empirical activity fraction matches the closed form") {
  const double lam = 100.0, lam_u = 100.0;
  const ActiveFraction af =
      simulate_active_fraction(lam, lam_u, 1.0, 400, 21);
  const double expected = 1.0 - std::pow(1.0 + lam_u / (3.5 * lam), -3.5);
  CHECK(std::abs(af.value - expected) < 3.0 * af.half_width + 0.01);
  CHECK(af.half_width > 0.0);

  const ActiveFraction none = simulate_active_fraction(lam, 0.0, 1.0, 50, 1);
  CHECK(none.value == doctest::Approx(0.0));
}
