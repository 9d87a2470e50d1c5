// SPDX-License-Identifier: Apache-2.0
//
// JSON experiment configuration with schema/unit/cross-field validation.
// Keys carry explicit unit suffixes so the unit conventions are machine
// checked at the boundary.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udn/energy.hpp"
#include "udn/power.hpp"
#include "udn/sinr.hpp"

namespace udn {

struct ExperimentConfig {
  PathLossParams pathloss =
      PathLossParams::from_db(103.8, 2.09, 145.4, 3.75);
  LosProbabilityModel los = LosProbabilityModel::exp_square(0.0825);
  FadingModel fading;
  LoadModel load;
  std::vector<double> densities_per_km2;
  double sigma2 = 0.0;

  bool power_enabled = false;
  PowerSearchConfig power;

  bool energy_enabled = false;
  PowerConsumptionModel energy;
  double area_km2 = 1.0;
  double bandwidth_hz = 10e6;

  bool mc_enabled = false;
  long mc_drops = 200000;
  std::uint64_t seed = 1;
  double disk_radius_km = 0.0;  // 0 = auto

  std::string out_dir = "out";

  Scenario scenario(double lambda_per_km2) const;
};

struct ConfigDiagnostics {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
  std::string joined() const;
};

// Parses and validates; diagnostics are aggregated rather than
// fail-fast.  The returned config is only meaningful when diag.ok().
ExperimentConfig parse_config(const std::string& json_text,
                              ConfigDiagnostics& diag);

ExperimentConfig load_config_file(const std::string& path,
                                  ConfigDiagnostics& diag);

}  // namespace udn
