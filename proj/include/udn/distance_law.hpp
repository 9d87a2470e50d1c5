// SPDX-License-Identifier: Apache-2.0
//
// Distribution of the (equivalent-LOS) distance from the typical user to
// its serving base station.  The tail probability is a product of
// exponentials, P[r > R] = prod_m exp(f_m(R)), and the density follows as
// f_r(R) = -P[r > R] * sum_m f_m'(R).  Closed-form term lists are used
// for the exp(-(d/L)^2) and exp(-d/L) LOS models; the piecewise ThreeGpp
// and constant models go through the generic ball-integral construction.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "udn/propagation.hpp"

namespace udn {

struct LawTerm {
  std::function<double(double)> f;   // exponent contribution
  std::function<double(double)> df;  // its derivative in R
  std::string name;
};

class DistanceLaw {
 public:
  DistanceLaw(double lambda_per_km2, const PathLossParams& pathloss,
              const LosProbabilityModel& los_model);

  double tail_probability(double R_km) const;  // P[r > R]
  double pdf(double R_km) const;               // f_r(R)
  double log_tail(double R_km) const;          // sum_m f_m(R)

  // Smallest radius (by doubling search) with tail below eps.
  double tail_radius(double eps) const;

  double density() const { return lambda_; }
  const PathLossParams& pathloss() const { return pl_; }
  const LosProbabilityModel& los_model() const { return los_; }
  const std::vector<LawTerm>& terms() const { return terms_; }

 private:
  double lambda_;
  PathLossParams pl_;
  LosProbabilityModel los_;
  std::vector<LawTerm> terms_;

  void build_exp_square();
  void build_exp();
  void build_constant();
  void build_generic();
};

}  // namespace udn
