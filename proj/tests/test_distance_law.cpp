// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "udn/distance_law.hpp"
#include "udn/quadrature.hpp"

using namespace udn;

namespace {
PathLossParams reference_params() {
  return PathLossParams::from_db(103.8, 2.09, 145.4, 3.75);
}
}  // namespace

TEST_CASE("tail is 1 at the origin and decreasing to 0") {
  const DistanceLaw law(100.0, reference_params(),
                        LosProbabilityModel::exp_square(0.0825));
  CHECK(law.tail_probability(0.0) == doctest::Approx(1.0));
  double prev = 1.0 + 1e-12;
  for (double R = 0.0; R < 2.0; R += 0.01) {
    const double t = law.tail_probability(R);
    CHECK(t <= prev + 1e-12);
    prev = t;
  }
  CHECK(law.tail_probability(law.tail_radius(1e-9)) < 1e-9);
}

TEST_CASE("degenerate single-slope law is Rayleigh") {
  const auto ss = PathLossParams::single_slope(140.7, 3.67);
  const DistanceLaw law(100.0, ss, LosProbabilityModel::constant(1.0));
  CHECK(law.tail_probability(0.05) ==
        doctest::Approx(std::exp(-0.25 * M_PI)).epsilon(1e-12));
  // pdf peak at 1/sqrt(2 pi lambda)
  const double peak = 1.0 / std::sqrt(2.0 * M_PI * 100.0);
  const double at_peak = law.pdf(peak);
  CHECK(at_peak > law.pdf(peak * 0.9));
  CHECK(at_peak > law.pdf(peak * 1.1));
  CHECK(law.pdf(0.05) == doctest::Approx(2.0 * M_PI * 100.0 * 0.05 *
                                         std::exp(-M_PI * 100.0 * 0.0025))
                             .epsilon(1e-12));
}

TEST_CASE("pdf equals the negative tail derivative (all models)") {
  const auto pl = reference_params();
  struct Case {
    LosProbabilityModel model;
    double h;
    double tol;
  };
  // The quadrature-backed generic law needs a larger step: adaptive
  // subdivision adds ~1e-12 absolute noise to the tail, which a 1e-6
  // step would amplify past the truncation error.
  const std::vector<Case> cases = {
      {LosProbabilityModel::exp_square(0.0825), 1e-6, 1e-5},
      {LosProbabilityModel::exponential(0.0825), 1e-6, 1e-5},
      {LosProbabilityModel::three_gpp(0.156, 0.03), 1e-4, 1e-4},
      {LosProbabilityModel::constant(0.5), 1e-6, 1e-5}};
  for (const auto& c : cases) {
    const DistanceLaw law(100.0, pl, c.model);
    for (double R : {0.02, 0.05, 0.1, 0.3}) {
      const double fd =
          (law.tail_probability(R - c.h) - law.tail_probability(R + c.h)) /
          (2.0 * c.h);
      CHECK(law.pdf(R) == doctest::Approx(fd).epsilon(c.tol));
      CHECK(law.pdf(R) >= 0.0);
    }
  }
}

TEST_CASE("normalization") {
  const auto pl = reference_params();
  for (double lam : {10.0, 1000.0}) {
    const DistanceLaw law(lam, pl, LosProbabilityModel::exp_square(0.0825));
    const double rmax = law.tail_radius(1e-12);
    const double mass = integrate_or_throw(
        [&law](double R) { return R <= 0.0 ? 0.0 : law.pdf(R); }, 0.0, rmax,
        1e-9, 1e-9, 4000);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("vanishing LOS reach reduces to the pure-NLOS law") {
  const auto pl = reference_params();
  const double lam = 100.0;
  const DistanceLaw law(lam, pl, LosProbabilityModel::exp_square(1e-4));
  const double keq = pl.k_eq();
  const double beq = pl.beta_eq();
  for (double R : {0.05, 0.2, 0.8}) {
    const double q = keq * std::pow(R, beq);
    const double pure_nlos = std::exp(-M_PI * lam * q * q);
    CHECK(law.tail_probability(R) ==
          doctest::Approx(pure_nlos).epsilon(1e-6));
  }
}

TEST_CASE("term lists have the expected sizes") {
  const auto pl = reference_params();
  CHECK(DistanceLaw(10, pl, LosProbabilityModel::exp_square(0.0825))
            .terms()
            .size() == 3);
  CHECK(DistanceLaw(10, pl, LosProbabilityModel::exponential(0.0825))
            .terms()
            .size() == 5);
  // term exponents sum to zero at the origin so that P[r>0] = 1
  for (const auto& m :
       {LosProbabilityModel::exp_square(0.0825),
        LosProbabilityModel::exponential(0.0825)}) {
    const DistanceLaw law(10, pl, m);
    double s = 0.0;
    for (const auto& t : law.terms()) s += t.f(0.0);
    CHECK(s == doctest::Approx(0.0).epsilon(1e-12));
  }
}
