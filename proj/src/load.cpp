// SPDX-License-Identifier: Apache-2.0

#include "udn/load.hpp"

#include <cmath>

namespace udn {

LoadModel LoadModel::fully_loaded() { return LoadModel{}; }

LoadModel LoadModel::partially_loaded(double lambda_u_per_km2) {
  if (!(lambda_u_per_km2 > 0.0))
    throw std::invalid_argument("user density must be positive");
  LoadModel m;
  m.kind = Kind::PartiallyLoaded;
  m.lambda_u = lambda_u_per_km2;
  return m;
}

LoadModel LoadModel::frequency_reuse(int n) {
  if (n < 1) throw std::invalid_argument("reuse factor must be >= 1");
  LoadModel m;
  m.kind = Kind::FrequencyReuse;
  m.n = n;
  return m;
}

double prob_active(double lambda_per_km2, double lambda_u_per_km2) {
  if (!(lambda_per_km2 > 0.0))
    throw std::invalid_argument("BS density must be positive");
  if (lambda_u_per_km2 < 0.0)
    throw std::invalid_argument("user density must be nonnegative");
  const double x = lambda_u_per_km2 / (3.5 * lambda_per_km2);
  return 1.0 - std::pow(1.0 + x, -3.5);
}

double interferer_density(const LoadModel& model, double lambda_per_km2) {
  switch (model.kind) {
    case LoadModel::Kind::FullyLoaded:
      return lambda_per_km2;
    case LoadModel::Kind::FrequencyReuse:
      return lambda_per_km2 / model.n;
    case LoadModel::Kind::PartiallyLoaded:
      return prob_active(lambda_per_km2, model.lambda_u) * lambda_per_km2;
  }
  return lambda_per_km2;
}

double active_density(const LoadModel& model, double lambda_per_km2) {
  switch (model.kind) {
    case LoadModel::Kind::FullyLoaded:
    case LoadModel::Kind::FrequencyReuse:
      return lambda_per_km2;
    case LoadModel::Kind::PartiallyLoaded:
      return prob_active(lambda_per_km2, model.lambda_u) * lambda_per_km2;
  }
  return lambda_per_km2;
}

}  // namespace udn
