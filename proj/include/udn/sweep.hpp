// SPDX-License-Identifier: Apache-2.0
//
// Density-sweep orchestration: per-density analytical metrics, optional
// power search, energy metrics and Monte Carlo counterparts; CSV
// persistence and power-law fit reporting.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "udn/config.hpp"

namespace udn {

inline constexpr int kCsvSchemaVersion = 1;

struct SweepRow {
  double lambda = 0.0;
  double lambda_a = 0.0;
  double lambda_i = 0.0;
  double outage = NAN;
  double avg_se = NAN;  // bit/s/Hz
  bool se_cap_hit = false;
  double ase = NAN;  // bit/s/Hz/km^2
  double ptx_dbm = NAN;
  double ptot_w = NAN;
  double ee_bit_per_joule = NAN;
  double mc_outage = NAN;
  double mc_outage_hw = NAN;
  double mc_avg_se = NAN;
  double mc_avg_se_hw = NAN;
  std::string error;  // reason code when a column is null
};

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, int threads = 0);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> csv_to_rows(const std::string& csv_text);

// Power-law fits of ASE and TX power over the standard density
// intervals, plus closed-form optima with reliability flags.
std::string fit_report(const std::vector<SweepRow>& rows,
                       const ExperimentConfig& cfg);

}  // namespace udn
