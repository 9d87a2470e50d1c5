// SPDX-License-Identifier: Apache-2.0
//
// Brute-force simulation oracle: Poisson deployments on a disk with the
// typical user at the center, per-BS LOS draws, strongest-mean-power
// association, unit-mean exponential fading, and load thinning of the
// interferer field.  Random streams are split per drop from the master
// seed, so results are independent of thread scheduling.

#pragma once

#include <cstdint>
#include <vector>

#include "udn/sinr.hpp"

namespace udn {

struct SimConfig {
  Scenario scenario;
  double disk_radius_km = 0.0;  // 0: choose automatically
  long drops = 10000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
};

struct EmpiricalStats {
  std::vector<double> thresholds;  // linear SINR
  std::vector<double> ccdf;
  std::vector<double> half_width;  // 1.96 * binomial std error
  double mean_log2_rate = 0.0;
  double rate_half_width = 0.0;
  long drops_used = 0;
  long empty_resampled = 0;  // realizations redrawn for having no BS
  double disk_radius_km = 0.0;
};

// Disk radius such that (a) the serving-distance tail beyond it is
// below 1e-6 and (b) the mean interference truncated at the edge is
// below 1e-3 of the median received signal.
double auto_disk_radius(const Scenario& scenario);

EmpiricalStats simulate_sinr(const SimConfig& config,
                             const std::vector<double>& thresholds_linear);

struct ActiveFraction {
  double value = 0.0;
  double half_width = 0.0;
};

// Empirical fraction of BSs with at least one nearest-associated user.
// Only BSs in the inner 60% of the disk are counted, against users on
// the full disk, to keep boundary cells out of the estimate.
ActiveFraction simulate_active_fraction(double lambda_per_km2,
                                        double lambda_u_per_km2,
                                        double radius_km, long drops,
                                        std::uint64_t seed, int threads = 0);

}  // namespace udn
