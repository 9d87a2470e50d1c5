// SPDX-License-Identifier: Apache-2.0

#include "udn/energy.hpp"

#include <cmath>

namespace udn {

void PowerConsumptionModel::validate() const {
  if (!(p0_watts > 0.0)) throw std::invalid_argument("P0 must be positive");
  if (!(k_rf >= 1.0)) throw std::invalid_argument("K_RF must be >= 1");
  if (!(rho > 0.0) || !(rho < 1.0))
    throw std::invalid_argument("rho must be in (0,1)");
}

double total_power(const PowerConsumptionModel& model, double area_km2,
                   double lambda_per_km2, double lambda_a_per_km2,
                   double p_tx_watts) {
  model.validate();
  if (lambda_a_per_km2 > lambda_per_km2)
    throw std::invalid_argument("active density cannot exceed total density");
  if (area_km2 < 0.0 || lambda_per_km2 < 0.0 || lambda_a_per_km2 < 0.0 ||
      p_tx_watts < 0.0)
    throw std::invalid_argument("arguments must be nonnegative");
  return area_km2 * lambda_a_per_km2 * model.p0_watts +
         area_km2 * lambda_a_per_km2 * p_tx_watts * model.k_rf +
         area_km2 * (lambda_per_km2 - lambda_a_per_km2) * model.rho *
             model.p0_watts;
}

double energy_efficiency(double throughput_bps, double total_power_watts) {
  if (!(total_power_watts > 0.0))
    throw std::invalid_argument("total power must be positive");
  return throughput_bps / total_power_watts;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                          double z_min, double z_max) {
  std::vector<std::pair<double, double>> sel;
  for (const auto& [z, f] : points) {
    if (z < z_min || z > z_max) continue;
    if (!(z > 0.0) || !(f > 0.0))
      throw std::invalid_argument("fit requires positive data");
    sel.emplace_back(std::log(z), std::log(f));
  }
  if (sel.size() < 2)
    throw std::invalid_argument(
        "fit requires at least two points inside the domain");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : sel) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(sel.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("degenerate abscissae");
  PowerLawFit fit;
  fit.b = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.b * sx) / n;
  fit.a = std::exp(intercept);
  fit.z_min = z_min;
  fit.z_max = z_max;
  for (const auto& [x, y] : sel)
    fit.residual = std::max(fit.residual,
                            std::abs(y - (intercept + fit.b * x)));
  return fit;
}

RegimeClassification classify_regime(double alpha, double delta, double p0,
                                     double k_rf, double p_t) {
  if (!(alpha > 0.0) || !(delta < 0.0))
    throw std::invalid_argument("expected alpha > 0 and delta < 0");
  RegimeClassification out;
  const double boundary = 1.0 + delta;
  if (std::abs(alpha - boundary) < 1e-12) {
    out.kind = RegimeClassification::Kind::DegenerateBoundary;
    return out;
  }
  if (alpha >= 1.0) {
    out.kind = RegimeClassification::Kind::MonotoneIncreasing;
  } else if (alpha < boundary) {
    out.kind = RegimeClassification::Kind::MonotoneDecreasing;
  } else {
    out.kind = RegimeClassification::Kind::InteriorMaximum;
    if (p0 > 0.0 && k_rf > 0.0 && p_t > 0.0)
      out.lambda0 = optimal_density_full(alpha, delta, p0, k_rf, p_t);
  }
  return out;
}

double optimal_density_full(double alpha, double delta, double p0,
                            double k_rf, double p_t) {
  if (!(alpha < 1.0) || !(alpha > 1.0 + delta))
    throw std::invalid_argument("interior optimum requires 1+delta<alpha<1");
  if (!(p0 > 0.0) || !(k_rf > 0.0) || !(p_t > 0.0))
    throw std::invalid_argument("constants must be positive");
  return std::pow(p0 * (1.0 - alpha) / (k_rf * p_t * (alpha - delta - 1.0)),
                  1.0 / delta);
}

PartialOptimum optimal_density_partial(double alpha, double lambda_u,
                                       double rho) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0,1)");
  if (!(rho > 0.0) || !(rho < 1.0))
    throw std::invalid_argument("rho must be in (0,1)");
  if (!(lambda_u > 0.0))
    throw std::invalid_argument("lambda_u must be positive");
  PartialOptimum out;
  out.lambda_star = alpha * lambda_u * (1.0 - rho) / (rho * (1.0 - alpha));
  out.reliable = out.lambda_star > 3.0 * lambda_u;
  return out;
}

}  // namespace udn
