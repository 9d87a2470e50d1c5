// SPDX-License-Identifier: Apache-2.0
//
// SINR statistics at the typical user: Laplace transform of the
// interference seen past a serving radius, conditional and unconditioned
// CCDF, average spectral efficiency and area spectral efficiency.

#pragma once

#include <memory>
#include <vector>

#include "udn/distance_law.hpp"
#include "udn/load.hpp"
#include "udn/propagation.hpp"

namespace udn {

struct Scenario {
  PathLossParams pathloss;
  LosProbabilityModel los;
  FadingModel fading;
  double lambda = 0.0;  // BS per km^2
  LoadModel load;
  // Noise power normalized by the per-BS transmit power (linear,
  // dimensionless); 0 encodes the interference-limited idealization.
  double sigma2 = 0.0;

  void validate() const;
};

// Laplace transform of the interference from BSs whose equivalent-LOS
// distance exceeds R: LOS interferers live beyond R, NLOS interferers
// beyond d_eq^{-1}(R).
double laplace_interference(const Scenario& scenario, double s, double R_km,
                            double abs_tol = 1e-8);

// P[SINR > y | serving equivalent distance = R]
double conditional_ccdf(const Scenario& scenario, double y, double R_km);

// P[SINR > y], integrating the conditional CCDF against the serving
// distance density by adaptive quadrature.
double sinr_ccdf(const Scenario& scenario, double y);

double outage(const Scenario& scenario, double gamma_th);

struct SpectralEfficiency {
  double value = 0.0;  // bit/s/Hz
  bool cap_hit = false;
  double u_max = 0.0;
};

// E[log2(1 + SINR)] as the integral of the rate CCDF over u in
// [0, u_max]; u_max covers all reference scenarios (the tail CCDF is
// numerically zero there) and the cap is reported if it is not.
SpectralEfficiency avg_spectral_efficiency(const Scenario& scenario,
                                           double u_max = 40.0);

// lambda_A * E[C] / N, bit/s/Hz/km^2
double ase(const Scenario& scenario, double u_max = 40.0);

// Serving-distance quadrature grid cached for repeated CCDF evaluation
// (density sweeps, rate integrals, and the power search, where only the
// noise term changes between evaluations).  Gauss-Legendre nodes under
// the rational map R = c t/(1-t) place abscissae where the density has
// its mass at every deployment density.
class ServingDistanceGrid {
 public:
  explicit ServingDistanceGrid(const Scenario& scenario, int nodes = 160);

  // CCDF with the grid's cached density weights; sigma2 overrides the
  // scenario value.
  double ccdf(double y, double sigma2) const;
  double ccdf(double y) const;

  // Cache for a fixed SINR threshold: the Laplace factor is
  // sigma2-independent, so each evaluation is a weighted sum.
  struct FixedThreshold {
    std::vector<double> noise_coeff;  // mu*gamma*R_i^beta_L / k_L
    std::vector<double> weighted;     // w_i * pdf_i * Laplace_i
    double ccdf(double sigma2) const;
  };
  FixedThreshold at_threshold(double gamma_th) const;

  double norm() const;  // quadrature mass of the pdf (should be ~1)
  const Scenario& scenario() const { return scn_; }

 private:
  Scenario scn_;
  std::shared_ptr<DistanceLaw> law_;
  std::vector<double> R_;
  std::vector<double> wpdf_;  // weight * Jacobian * pdf
};

}  // namespace udn
