// SPDX-License-Identifier: Apache-2.0

#include "udn/power.hpp"

#include <cmath>

namespace udn {

void PowerSearchConfig::validate() const {
  if (steps_db.empty())
    throw std::invalid_argument("step vector must not be empty");
  double prev = INFINITY;
  for (double s : steps_db) {
    if (!(s > 0.0) || !(s < prev))
      throw std::invalid_argument(
          "steps must be positive and strictly decreasing");
    prev = s;
  }
  if (!(delta_theta > 0.0) || !(delta_theta < 1.0))
    throw std::invalid_argument("delta_theta must be in (0,1)");
  if (!(gamma_th > 0.0))
    throw std::invalid_argument("gamma_th must be positive");
  if (!(bandwidth_hz > 0.0))
    throw std::invalid_argument("bandwidth must be positive");
}

double noise_power_dbm(const PowerSearchConfig& config, int reuse_n) {
  if (reuse_n < 1) throw std::invalid_argument("reuse factor must be >= 1");
  if (!(config.bandwidth_hz > 0.0))
    throw std::invalid_argument("bandwidth must be positive");
  return config.noise_psd_dbm_hz +
         10.0 * std::log10(config.bandwidth_hz / reuse_n) +
         config.noise_figure_db;
}

PowerResult min_tx_power(const Scenario& scenario,
                         const PowerSearchConfig& config) {
  config.validate();
  Scenario scn = scenario;
  scn.sigma2 = 0.0;
  scn.validate();

  // Cache the per-node Laplace factors once: only the noise exponential
  // depends on the candidate power, so each outage evaluation is a
  // weighted sum over the serving-distance grid.  Using the same grid
  // for theta and theta* also cancels any residual grid bias.
  ServingDistanceGrid grid(scn);
  ServingDistanceGrid::FixedThreshold cache =
      grid.at_threshold(config.gamma_th);

  const double theta_star = 1.0 - cache.ccdf(0.0);
  const double p_n0 = noise_power_dbm(config, scn.load.reuse_factor());
  auto theta_at = [&](double p_dbm) {
    const double sigma2 = std::pow(10.0, (p_n0 - p_dbm) / 10.0);
    return 1.0 - cache.ccdf(sigma2);
  };

  double p = p_n0;
  double theta = theta_at(p);
  long iterations = 0;
  double prev_theta = INFINITY;  // outage must not increase with power

  for (size_t level = 0; level < config.steps_db.size(); ++level) {
    const double step = config.steps_db[level];
    long taken = 0;
    while (std::abs(theta - theta_star) > config.delta_theta) {
      if (taken >= config.max_iter_per_level)
        throw PowerSearchFailure(
            "power search exceeded the per-level iteration cap", p, theta);
      p += step;
      theta = theta_at(p);
      ++taken;
      ++iterations;
      if (theta > prev_theta + 1e-12)
        throw PowerSearchFailure(
            "outage increased along the search trajectory", p, theta);
      prev_theta = theta;
    }
    // back off one step before refining, except at the finest level;
    // nothing to remove if the criterion held on entry
    if (level + 1 < config.steps_db.size() && taken > 0) {
      p -= step;
      theta = theta_at(p);
      prev_theta = INFINITY;
    }
  }

  PowerResult out;
  out.p_tx_dbm = p;
  out.theta_star = theta_star;
  out.theta_achieved = theta;
  out.iterations = iterations;
  return out;
}

}  // namespace udn
