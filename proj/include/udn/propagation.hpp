// SPDX-License-Identifier: Apache-2.0
//
// Channel model: dual-state (LOS/NLOS) power-law path loss, the LOS
// probability functions, and the equivalent-distance mapping that folds
// the NLOS point process into LOS terms.
//
// Distances are kilometers everywhere; gains are linear and referenced
// at 1 km. dB appears only at I/O boundaries.

#pragma once

#include <stdexcept>

namespace udn {

struct PathLossParams {
  double k_los;      // linear gain at 1 km, LOS
  double beta_los;   // LOS path-loss exponent
  double k_nlos;     // linear gain at 1 km, NLOS
  double beta_nlos;  // NLOS path-loss exponent

  // pl_db: path loss in dB at 1 km (positive number)
  static PathLossParams from_db(double pl_los_db, double beta_los,
                                double pl_nlos_db, double beta_nlos);
  static PathLossParams single_slope(double pl_db, double beta);

  void validate() const;

  // d_eq_inverse(R) = k_eq * R^beta_eq maps a LOS radius R to the NLOS
  // radius delivering the same received power.
  double k_eq() const;
  double beta_eq() const;
};

struct LosProbabilityModel {
  enum class Kind { ThreeGpp, ExpSquare, Exp, Constant };
  Kind kind = Kind::Constant;
  double d0 = 0.0;     // km (ThreeGpp)
  double d1 = 0.0;     // km (ThreeGpp)
  double scale = 0.0;  // km (ExpSquare / Exp)
  double p = 1.0;      // Constant

  static LosProbabilityModel three_gpp(double d0, double d1);
  static LosProbabilityModel exp_square(double scale_km);
  static LosProbabilityModel exponential(double scale_km);
  static LosProbabilityModel constant(double p);
};

struct FadingModel {
  double mu = 1.0;  // rate of the exponential fading-power distribution
};

double los_probability(const LosProbabilityModel& model, double d_km);

double path_gain(const PathLossParams& params, double d_km, bool los);

// Forward mapping: NLOS distance d -> LOS distance with equal power.
double equivalent_distance(const PathLossParams& params, double d_km);

// Inverse mapping: LOS radius R -> NLOS radius with equal power.
double equivalent_distance_inverse(const PathLossParams& params, double R_km);

// Scale for the exp(-(d/L)^2) model chosen so that it crosses 1/2 where
// the piecewise ThreeGpp curve does.  The ThreeGpp curve equals 1/2 on a
// short plateau for the reference parameters; the midpoint of that
// plateau is used as the crossing abscissa.
double calibrate_exp_square_scale(double d0, double d1);

}  // namespace udn
