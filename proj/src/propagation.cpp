// SPDX-License-Identifier: Apache-2.0

#include "udn/propagation.hpp"

#include <algorithm>
#include <cmath>

namespace udn {

PathLossParams PathLossParams::from_db(double pl_los_db, double beta_los,
                                       double pl_nlos_db, double beta_nlos) {
  PathLossParams p;
  p.k_los = std::pow(10.0, -pl_los_db / 10.0);
  p.beta_los = beta_los;
  p.k_nlos = std::pow(10.0, -pl_nlos_db / 10.0);
  p.beta_nlos = beta_nlos;
  p.validate();
  return p;
}

PathLossParams PathLossParams::single_slope(double pl_db, double beta) {
  return from_db(pl_db, beta, pl_db, beta);
}

void PathLossParams::validate() const {
  if (!(k_los > 0.0) || !(k_nlos > 0.0))
    throw std::invalid_argument("path-loss gains must be positive");
  if (!(beta_los > 0.0) || !(beta_nlos >= beta_los))
    throw std::invalid_argument(
        "exponents must satisfy beta_nlos >= beta_los > 0");
}

double PathLossParams::k_eq() const {
  // Equal received power: k_nlos d^-beta_nlos = k_los R^-beta_los
  //   =>  d = (k_nlos/k_los)^(1/beta_nlos) * R^(beta_los/beta_nlos)
  return std::pow(k_nlos / k_los, 1.0 / beta_nlos);
}

double PathLossParams::beta_eq() const { return beta_los / beta_nlos; }

LosProbabilityModel LosProbabilityModel::three_gpp(double d0, double d1) {
  if (!(d0 > 0.0) || !(d1 > 0.0))
    throw std::invalid_argument("ThreeGpp scales must be positive");
  LosProbabilityModel m;
  m.kind = Kind::ThreeGpp;
  m.d0 = d0;
  m.d1 = d1;
  return m;
}

LosProbabilityModel LosProbabilityModel::exp_square(double scale_km) {
  if (!(scale_km > 0.0))
    throw std::invalid_argument("ExpSquare scale must be positive");
  LosProbabilityModel m;
  m.kind = Kind::ExpSquare;
  m.scale = scale_km;
  return m;
}

LosProbabilityModel LosProbabilityModel::exponential(double scale_km) {
  if (!(scale_km > 0.0))
    throw std::invalid_argument("Exp scale must be positive");
  LosProbabilityModel m;
  m.kind = Kind::Exp;
  m.scale = scale_km;
  return m;
}

LosProbabilityModel LosProbabilityModel::constant(double p) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::invalid_argument("constant LOS probability must be in [0,1]");
  LosProbabilityModel m;
  m.kind = Kind::Constant;
  m.p = p;
  return m;
}

double los_probability(const LosProbabilityModel& model, double d_km) {
  if (d_km < 0.0)
    throw std::domain_error("distance must be nonnegative");
  switch (model.kind) {
    case LosProbabilityModel::Kind::ThreeGpp: {
      // 0.5 - min(0.5, 5 e^{-d0/d}) + min(0.5, 5 e^{-d/d1});
      // the d->0 limit of e^{-d0/d} is 0, handled analytically.
      const double t1 =
          d_km == 0.0 ? 0.0 : std::min(0.5, 5.0 * std::exp(-model.d0 / d_km));
      const double t2 = std::min(0.5, 5.0 * std::exp(-d_km / model.d1));
      return 0.5 - t1 + t2;
    }
    case LosProbabilityModel::Kind::ExpSquare: {
      const double r = d_km / model.scale;
      return std::exp(-r * r);
    }
    case LosProbabilityModel::Kind::Exp:
      return std::exp(-d_km / model.scale);
    case LosProbabilityModel::Kind::Constant:
      return model.p;
  }
  return 0.0;
}

double path_gain(const PathLossParams& params, double d_km, bool los) {
  if (!(d_km > 0.0))
    throw std::domain_error("path_gain requires d > 0");
  return los ? params.k_los * std::pow(d_km, -params.beta_los)
             : params.k_nlos * std::pow(d_km, -params.beta_nlos);
}

double equivalent_distance(const PathLossParams& params, double d_km) {
  if (d_km < 0.0) throw std::domain_error("distance must be nonnegative");
  if (d_km == 0.0) return 0.0;
  return std::pow(params.k_los / params.k_nlos, 1.0 / params.beta_los) *
         std::pow(d_km, params.beta_nlos / params.beta_los);
}

double equivalent_distance_inverse(const PathLossParams& params, double R_km) {
  if (R_km < 0.0) throw std::domain_error("distance must be nonnegative");
  return params.k_eq() * std::pow(R_km, params.beta_eq());
}

double calibrate_exp_square_scale(double d0, double d1) {
  const LosProbabilityModel gpp = LosProbabilityModel::three_gpp(d0, d1);
  auto g = [&gpp](double d) { return los_probability(gpp, d) - 0.5; };

  double lo = 1e-9, hi = 1e4;
  if (!(g(lo) > 0.0) || !(g(hi) < 0.0))
    throw std::runtime_error(
        "LOS probability curve does not cross 1/2 on (0, 1e4] km");

  // The curve can sit exactly at 1/2 on a plateau (both clamps active);
  // bisect separately for the last d with g>0 and the first with g<0,
  // then take the midpoint.
  double a_lo = lo, a_hi = hi;
  for (int i = 0; i < 80 && a_hi - a_lo > 1e-12; ++i) {
    const double mid = 0.5 * (a_lo + a_hi);
    (g(mid) > 0.0 ? a_lo : a_hi) = mid;
  }
  double b_lo = lo, b_hi = hi;
  for (int i = 0; i < 80 && b_hi - b_lo > 1e-12; ++i) {
    const double mid = 0.5 * (b_lo + b_hi);
    (g(mid) < 0.0 ? b_hi : b_lo) = mid;
  }
  const double d_star = 0.5 * (a_lo + b_hi);
  return d_star / std::sqrt(std::log(2.0));
}

}  // namespace udn
