// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "udn/load.hpp"

using namespace udn;

TEST_CASE("activity probability reference value and limits") {
  CHECK(prob_active(100.0, 100.0) ==
        doctest::Approx(1.0 - std::pow(1.0 + 1.0 / 3.5, -3.5)).epsilon(1e-12));
  CHECK(prob_active(100.0, 100.0) == doctest::Approx(0.58507).epsilon(1e-4));
  CHECK(prob_active(100.0, 0.0) == doctest::Approx(0.0));
  // dense users: every BS active
  CHECK(prob_active(1.0, 1e9) == doctest::Approx(1.0).epsilon(1e-9));
  // dense BSs: activity vanishes
  CHECK(prob_active(1e9, 1.0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(prob_active(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(prob_active(10.0, -1.0), std::invalid_argument);
}

TEST_CASE("activity probability monotone in both arguments") {
  double prev = 1.0;
  for (double lam = 1.0; lam <= 1e5; lam *= 2.0) {
    const double p = prob_active(lam, 500.0);
    CHECK(p < prev);
    prev = p;
  }
  prev = 0.0;
  for (double lu = 1.0; lu <= 1e5; lu *= 2.0) {
    const double p = prob_active(500.0, lu);
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("interferer and active densities per model") {
  const double lam = 200.0;

  const auto full = LoadModel::fully_loaded();
  CHECK(interferer_density(full, lam) == doctest::Approx(lam));
  CHECK(active_density(full, lam) == doctest::Approx(lam));

  const auto reuse = LoadModel::frequency_reuse(4);
  CHECK(interferer_density(reuse, lam) == doctest::Approx(lam / 4.0));
  CHECK(active_density(reuse, lam) == doctest::Approx(lam));
  CHECK(reuse.reuse_factor() == 4);

  const auto part = LoadModel::partially_loaded(100.0);
  const double pa = prob_active(lam, 100.0);
  CHECK(interferer_density(part, lam) == doctest::Approx(pa * lam));
  CHECK(active_density(part, lam) == doctest::Approx(pa * lam));
  CHECK(part.reuse_factor() == 1);
}

TEST_CASE("density ordering 0 < lambda_I <= lambda_A <= lambda") {
  const std::vector<LoadModel> models = {LoadModel::fully_loaded(),
                                         LoadModel::frequency_reuse(3),
                                         LoadModel::partially_loaded(250.0)};
  for (const auto& m : models) {
    for (double lam = 1.0; lam <= 1e4; lam *= 10.0) {
      const double li = interferer_density(m, lam);
      const double la = active_density(m, lam);
      CHECK(li > 0.0);
      CHECK(li <= la + 1e-12);
      CHECK(la <= lam + 1e-12);
    }
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(LoadModel::frequency_reuse(0), std::invalid_argument);
  CHECK_THROWS_AS(LoadModel::partially_loaded(-5.0), std::invalid_argument);
}
