// SPDX-License-Identifier: Apache-2.0
//
// Network power consumption, energy efficiency, power-law fitting of
// throughput/TX-power curves, and the closed-form optimal densities for
// fully and partially loaded deployments.
//
// Unit convention for the fits feeding the closed forms: density in BS
// per m^2 and power in watts (the only combination under which the
// reference scale constants are dimensionally consistent).  Interfaces
// below state their units explicitly.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace udn {

struct PowerConsumptionModel {
  double p0_watts = 10.0;  // circuitry power of an active BS
  double k_rf = 10.0;      // amplifier loss factor
  double rho = 0.5;        // stand-by consumption fraction, in (0,1)

  void validate() const;
};

// P_TOT = A lam_A P0 + A lam_A P_TX K_RF + A (lam - lam_A) rho P0
double total_power(const PowerConsumptionModel& model, double area_km2,
                   double lambda_per_km2, double lambda_a_per_km2,
                   double p_tx_watts);

double energy_efficiency(double throughput_bps, double total_power_watts);

struct PowerLawFit {
  double a = 0.0;  // scale
  double b = 0.0;  // exponent
  double z_min = 0.0, z_max = 0.0;
  double residual = 0.0;  // max |log f - log fit| over the points used
};

// Least-squares line in (log z, log f) over points with z inside
// [z_min, z_max]; needs at least two points, all positive.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                          double z_min, double z_max);

struct RegimeClassification {
  enum class Kind {
    MonotoneIncreasing,
    MonotoneDecreasing,
    InteriorMaximum,
    DegenerateBoundary
  };
  Kind kind = Kind::MonotoneIncreasing;
  double lambda0 = 0.0;  // filled for InteriorMaximum when constants given
};

// Sign analysis of d(eta_EE)/d(lambda) for throughput ~ lambda^alpha and
// TX power ~ lambda^delta (alpha > 0, delta < 0).  When the constants
// are supplied (all positive), the interior optimum is evaluated.
RegimeClassification classify_regime(double alpha, double delta,
                                     double p0 = 0.0, double k_rf = 0.0,
                                     double p_t = 0.0);

// lambda0 = (P0 (1-alpha) / (K_RF P_T (alpha - delta - 1)))^(1/delta);
// p_t is the fitted TX-power scale in watts at 1 BS/m^2; the result is
// in BS/m^2.
double optimal_density_full(double alpha, double delta, double p0,
                            double k_rf, double p_t);

struct PartialOptimum {
  double lambda_star = 0.0;  // same unit as lambda_u
  // The closed form assumes lambda well above lambda_U; flagged reliable
  // only when lambda* > 3 lambda_U (heuristic, reported in output).
  bool reliable = false;
};

// lambda* = alpha lambda_U (1-rho) / (rho (1-alpha))
PartialOptimum optimal_density_partial(double alpha, double lambda_u,
                                       double rho);

}  // namespace udn
