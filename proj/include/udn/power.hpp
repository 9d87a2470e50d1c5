// SPDX-License-Identifier: Apache-2.0
//
// Minimum per-BS transmit power reaching the interference-limited
// regime: starting from the noise floor, the power is raised in
// progressively finer dB steps until the outage matches the zero-noise
// outage within a configured tolerance.

#pragma once

#include <stdexcept>
#include <vector>

#include "udn/sinr.hpp"

namespace udn {

struct PowerSearchConfig {
  std::vector<double> steps_db{5.0, 1.0, 0.2, 0.05};  // coarse -> fine
  double gamma_th = 0.15848931924611134;  // linear SINR threshold (-8 dB)
  double delta_theta = 1e-3;      // outage tolerance (absolute)
  double bandwidth_hz = 10e6;
  double noise_figure_db = 9.0;
  double noise_psd_dbm_hz = -174.0;
  long max_iter_per_level = 10000;

  void validate() const;
};

struct PowerResult {
  double p_tx_dbm = 0.0;
  double theta_star = 0.0;      // outage in the zero-noise limit
  double theta_achieved = 0.0;  // outage at the returned power
  long iterations = 0;
};

struct PowerSearchFailure : std::runtime_error {
  double last_power_dbm;
  double last_theta;
  PowerSearchFailure(const std::string& what, double p, double t)
      : std::runtime_error(what), last_power_dbm(p), last_theta(t) {}
};

// AWGN power over BW/N in dBm, including the receiver noise figure.
double noise_power_dbm(const PowerSearchConfig& config, int reuse_n);

// The scenario's sigma2 field is ignored: the search drives
// sigma2 = 10^((P_N0 - P)/10), the noise power normalized by the
// candidate transmit power, exactly as the conditional CCDF defines it.
PowerResult min_tx_power(const Scenario& scenario,
                         const PowerSearchConfig& config);

}  // namespace udn
