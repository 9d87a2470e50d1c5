// SPDX-License-Identifier: Apache-2.0
//
// Mapping from deployment density, user density and frequency reuse to
// the interferer density and the probability that a base station is
// active.

#pragma once

#include <stdexcept>

namespace udn {

struct LoadModel {
  enum class Kind { FullyLoaded, PartiallyLoaded, FrequencyReuse };
  Kind kind = Kind::FullyLoaded;
  double lambda_u = 0.0;  // users per km^2 (PartiallyLoaded)
  int n = 1;              // reuse factor (FrequencyReuse)

  static LoadModel fully_loaded();
  static LoadModel partially_loaded(double lambda_u_per_km2);
  static LoadModel frequency_reuse(int n);

  int reuse_factor() const {
    return kind == Kind::FrequencyReuse ? n : 1;
  }
};

// p_A = 1 - (1 + lambda_U / (3.5 lambda))^{-3.5}
double prob_active(double lambda_per_km2, double lambda_u_per_km2);

double interferer_density(const LoadModel& model, double lambda_per_km2);
double active_density(const LoadModel& model, double lambda_per_km2);

}  // namespace udn
