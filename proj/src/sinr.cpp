// SPDX-License-Identifier: Apache-2.0

#include "udn/sinr.hpp"

#include <cmath>
#include <stdexcept>

#include "udn/quadrature.hpp"

namespace udn {

void Scenario::validate() const {
  pathloss.validate();
  if (!(lambda > 0.0)) throw std::invalid_argument("density must be positive");
  if (sigma2 < 0.0) throw std::invalid_argument("sigma2 must be >= 0");
  if (!(fading.mu > 0.0)) throw std::invalid_argument("mu must be positive");
}

double laplace_interference(const Scenario& scn, double s, double R_km,
                            double abs_tol) {
  if (s < 0.0) throw std::domain_error("s must be nonnegative");
  if (R_km < 0.0) throw std::domain_error("R must be nonnegative");
  if (s == 0.0) return 1.0;
  const double lam_i = interferer_density(scn.load, scn.lambda);
  if (lam_i <= 0.0) return 1.0;

  const double mu = scn.fading.mu;
  const PathLossParams& pl = scn.pathloss;
  const LosProbabilityModel& los = scn.los;

  // LOS interferers beyond R
  auto g_los = [&](double v) {
    const double q = s * pl.k_los * std::pow(v, -pl.beta_los);
    return q / (q + mu) * los_probability(los, v) * v;
  };
  // NLOS interferers beyond the equal-power radius d_eq^{-1}(R)
  const double r_nlos = equivalent_distance_inverse(pl, R_km);
  auto g_nlos = [&](double v) {
    const double q = s * pl.k_nlos * std::pow(v, -pl.beta_nlos);
    return q / (q + mu) * (1.0 - los_probability(los, v)) * v;
  };

  const double i_los =
      integrate_semi_infinite_or_throw(g_los, R_km, abs_tol, 1e-8);
  const double i_nlos =
      integrate_semi_infinite_or_throw(g_nlos, r_nlos, abs_tol, 1e-8);
  return std::exp(-2.0 * M_PI * lam_i * (i_los + i_nlos));
}

double conditional_ccdf(const Scenario& scn, double y, double R_km) {
  if (!(y > 0.0)) throw std::domain_error("threshold must be positive");
  if (!(R_km > 0.0)) throw std::domain_error("R must be positive");
  const double s = scn.fading.mu * y * std::pow(R_km, scn.pathloss.beta_los) /
                   scn.pathloss.k_los;
  return std::exp(-s * scn.sigma2) * laplace_interference(scn, s, R_km);
}

double sinr_ccdf(const Scenario& scn, double y) {
  scn.validate();
  DistanceLaw law(scn.lambda, scn.pathloss, scn.los);
  const double r_max = law.tail_radius(1e-10);
  auto f = [&](double R) {
    if (R <= 0.0) return 0.0;
    return law.pdf(R) * conditional_ccdf(scn, y, R);
  };
  const double v = integrate_or_throw(f, 0.0, r_max, 1e-6, 1e-6, 400);
  return std::min(1.0, std::max(0.0, v));
}

double outage(const Scenario& scn, double gamma_th) {
  return 1.0 - sinr_ccdf(scn, gamma_th);
}

ServingDistanceGrid::ServingDistanceGrid(const Scenario& scenario, int nodes)
    : scn_(scenario) {
  scn_.validate();
  law_ = std::make_shared<DistanceLaw>(scn_.lambda, scn_.pathloss, scn_.los);
  const GaussLegendreRule& rule = gauss_legendre(nodes);
  const double c = 3.0 / std::sqrt(M_PI * scn_.lambda);
  R_.resize(nodes);
  wpdf_.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double t = 0.5 * (rule.x[i] + 1.0);  // map (-1,1) -> (0,1)
    const double w = 0.5 * rule.w[i];
    const double om = 1.0 - t;
    const double R = c * t / om;
    const double jac = c / (om * om);
    R_[i] = R;
    wpdf_[i] = w * jac * law_->pdf(R);
  }
}

double ServingDistanceGrid::norm() const {
  double s = 0.0;
  for (double w : wpdf_) s += w;
  return s;
}

double ServingDistanceGrid::ccdf(double y, double sigma2) const {
  const double mu = scn_.fading.mu;
  const double bl = scn_.pathloss.beta_los;
  const double kl = scn_.pathloss.k_los;
  double acc = 0.0;
  for (size_t i = 0; i < R_.size(); ++i) {
    if (wpdf_[i] == 0.0) continue;
    const double s = mu * y * std::pow(R_[i], bl) / kl;
    acc += wpdf_[i] * std::exp(-s * sigma2) *
           laplace_interference(scn_, s, R_[i]);
  }
  return std::min(1.0, std::max(0.0, acc));
}

double ServingDistanceGrid::ccdf(double y) const { return ccdf(y, scn_.sigma2); }

ServingDistanceGrid::FixedThreshold ServingDistanceGrid::at_threshold(
    double gamma_th) const {
  FixedThreshold ft;
  const double mu = scn_.fading.mu;
  const double bl = scn_.pathloss.beta_los;
  const double kl = scn_.pathloss.k_los;
  ft.noise_coeff.resize(R_.size());
  ft.weighted.resize(R_.size());
  for (size_t i = 0; i < R_.size(); ++i) {
    const double s = mu * gamma_th * std::pow(R_[i], bl) / kl;
    ft.noise_coeff[i] = s;
    ft.weighted[i] =
        wpdf_[i] == 0.0 ? 0.0
                        : wpdf_[i] * laplace_interference(scn_, s, R_[i]);
  }
  return ft;
}

double ServingDistanceGrid::FixedThreshold::ccdf(double sigma2) const {
  double acc = 0.0;
  for (size_t i = 0; i < weighted.size(); ++i)
    acc += weighted[i] * std::exp(-noise_coeff[i] * sigma2);
  return std::min(1.0, std::max(0.0, acc));
}

SpectralEfficiency avg_spectral_efficiency(const Scenario& scn, double u_max) {
  scn.validate();
  SpectralEfficiency out;
  out.u_max = u_max;
  const double lam_i = interferer_density(scn.load, scn.lambda);
  if (lam_i <= 0.0 && scn.sigma2 == 0.0) {
    // infinite-SNR limit: the rate CCDF is 1 for every u
    out.value = u_max;
    out.cap_hit = true;
    return out;
  }
  ServingDistanceGrid grid(scn);
  auto rate_ccdf = [&](double u) {
    if (u <= 0.0) return 1.0;
    return grid.ccdf(std::exp2(u) - 1.0, scn.sigma2);
  };
  out.value = integrate_or_throw(rate_ccdf, 0.0, u_max, 1e-6, 1e-6, 400);
  out.cap_hit = rate_ccdf(u_max) > 1e-6;
  return out;
}

double ase(const Scenario& scn, double u_max) {
  const double lam_a = active_density(scn.load, scn.lambda);
  const int n = scn.load.reuse_factor();
  return lam_a * avg_spectral_efficiency(scn, u_max).value / n;
}

}  // namespace udn
