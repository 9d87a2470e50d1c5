// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "udn/sinr.hpp"

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

TEST_CASE("single-slope beta=4 closed form at 0 dB") {
  // interference-limited, Rayleigh fading, beta = 4:
  // P[SINR > y] = 1 / (1 + sqrt(y) (pi/2 - atan(1/sqrt(y))))
  const Scenario s = single_slope_scenario(100.0, 4.0);
  const double expected = 1.0 / (1.0 + (M_PI / 2.0 - std::atan(1.0)));
  CHECK(sinr_ccdf(s, 1.0) == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("single-slope coverage is density invariant") {
  const double y = std::pow(10.0, -0.8);
  const double ref = sinr_ccdf(single_slope_scenario(10.0, 3.67), y);
  for (double lam : {100.0, 1000.0}) {
    CHECK(sinr_ccdf(single_slope_scenario(lam, 3.67), y) ==
          doctest::Approx(ref).epsilon(1e-3));
  }
}

TEST_CASE("conditional CCDF limits") {
  const Scenario s = reference_scenario(100.0);
  // vanishing threshold: certain coverage
  CHECK(conditional_ccdf(s, 1e-12, 0.05) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(conditional_ccdf(s, 0.0, 0.05), std::domain_error);
  // Laplace transform at s = 0 is 1
  CHECK(laplace_interference(s, 0.0, 0.05) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // CCDF in [0, 1] and decreasing in the threshold
  double prev = 1.0;
  for (double y : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double c = sinr_ccdf(s, y);
    CHECK(c >= 0.0);
    CHECK(c <= prev + 1e-9);
    prev = c;
  }
}

TEST_CASE("noise only degrades coverage") {
  Scenario s = reference_scenario(100.0);
  const double y = std::pow(10.0, -0.8);
  const double noiseless = sinr_ccdf(s, y);
  double prev = noiseless;
  for (double sig : {1e-12, 1e-10, 1e-8}) {
    s.sigma2 = sig;
    const double c = sinr_ccdf(s, y);
    CHECK(c <= prev + 1e-9);
    prev = c;
  }
  CHECK(outage(s, y) == doctest::Approx(1.0 - prev).epsilon(1e-9));
}

TEST_CASE("Laplace transform matches a direct point-process estimate") {
  // Independent oracle: average exp(-s I) over explicit disk
  // realizations of the interferer field outside the serving radius.
  const Scenario s = reference_scenario(100.0);
  const double R = 0.05;
  const double sval = s.fading.mu * 1.0 *
                      std::pow(R, s.pathloss.beta_los) / s.pathloss.k_los;

  const double analytic = laplace_interference(s, sval, R);

  const double disk = 1.5;  // km, covers the interference support here
  std::mt19937_64 eng(12345);
  std::poisson_distribution<int> pois(s.lambda * M_PI * disk * disk);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double d_nlos_min = equivalent_distance_inverse(s.pathloss, R);
  double acc = 0.0;
  const int reps = 100000;
  for (int rep = 0; rep < reps; ++rep) {
    const int nbs = pois(eng);
    double interference = 0.0;
    for (int i = 0; i < nbs; ++i) {
      const double r = disk * std::sqrt(uni(eng));
      const bool los = uni(eng) < los_probability(s.los, r);
      if (los && r <= R) continue;
      if (!los && r <= d_nlos_min) continue;
      const double fade = -std::log(1.0 - uni(eng));
      interference += fade * path_gain(s.pathloss, r, los);
    }
    acc += std::exp(-sval * interference);
  }
  CHECK(analytic == doctest::Approx(acc / reps).epsilon(0.01));
}

TEST_CASE("vanishing interferer density with zero noise gives full coverage") {
  Scenario s = reference_scenario(100.0);
  s.load = LoadModel::frequency_reuse(1000000);
  const double c = sinr_ccdf(s, std::pow(10.0, -0.8));
  CHECK(c == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("spectral efficiency cap when there is nothing to lose") {
  // remove essentially all interference (and noise) via a huge reuse
  Scenario s = reference_scenario(100.0);
  s.load = LoadModel::frequency_reuse(1000000000);
  const SpectralEfficiency se = avg_spectral_efficiency(s, 12.0);
  CHECK(se.cap_hit);
  CHECK(se.value > 11.9);
  CHECK(se.value <= 12.0 + 1e-9);
}

TEST_CASE("frequency reuse halves ASE at fixed spectral efficiency") {
  Scenario s1 = reference_scenario(100.0);
  Scenario s2 = s1;
  s2.load = LoadModel::frequency_reuse(2);
  const SpectralEfficiency c1 = avg_spectral_efficiency(s1);
  const SpectralEfficiency c2 = avg_spectral_efficiency(s2);
  CHECK(c2.value > c1.value);  // fewer interferers
  // ase = lambda_A * E[C] / N
  CHECK(ase(s2) == doctest::Approx(100.0 * c2.value / 2.0).epsilon(1e-9));
  CHECK(ase(s1) == doctest::Approx(100.0 * c1.value).epsilon(1e-9));
}

TEST_CASE("partial load beats full load when BSs outnumber users") {
  const double y = std::pow(10.0, -0.8);
  Scenario full = reference_scenario(500.0);
  Scenario part = full;
  part.load = LoadModel::partially_loaded(100.0);
  CHECK(sinr_ccdf(part, y) > sinr_ccdf(full, y));
}

TEST_CASE("serving-distance grid agrees with the adaptive integral") {
  const Scenario s = reference_scenario(100.0);
  const ServingDistanceGrid grid(s);
  CHECK(grid.norm() == doctest::Approx(1.0).epsilon(1e-6));
  for (double y : {0.1, 1.0, 10.0}) {
    CHECK(grid.ccdf(y) == doctest::Approx(sinr_ccdf(s, y)).epsilon(1e-5));
  }
  // the fixed-threshold cache reproduces the grid ccdf for any sigma2
  const double gamma = std::pow(10.0, -0.8);
  const auto cache = grid.at_threshold(gamma);
  for (double sig : {0.0, 1e-11, 1e-9}) {
    CHECK(cache.ccdf(sig) ==
          doctest::Approx(grid.ccdf(gamma, sig)).epsilon(1e-10));
  }
}
