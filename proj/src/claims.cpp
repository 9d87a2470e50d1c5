// SPDX-License-Identifier: Apache-2.0

#include "udn/claims.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "udn/distance_law.hpp"
#include "udn/energy.hpp"
#include "udn/montecarlo.hpp"
#include "udn/parallel.hpp"
#include "udn/power.hpp"
#include "udn/quadrature.hpp"
#include "udn/sinr.hpp"

namespace udn {
namespace {

// -------------------------------------------------------------------
// reference parameterization

PathLossParams dual_slope_pl() {
  return PathLossParams::from_db(103.8, 2.09, 145.4, 3.75);
}
PathLossParams single_slope_pl(double beta = 3.67) {
  return PathLossParams::single_slope(140.7, beta);
}
LosProbabilityModel exp_square_los() {
  return LosProbabilityModel::exp_square(0.0825);
}
LosProbabilityModel exp_los() {
  return LosProbabilityModel::exponential(0.0825);
}
LosProbabilityModel three_gpp_los() {
  return LosProbabilityModel::three_gpp(0.156, 0.03);
}

const double kGamma8 = std::pow(10.0, -0.8);  // -8 dB
const double kBandwidthHz = 10e6;
const double kP0 = 10.0;
const double kKrf = 10.0;

PowerSearchConfig default_power_config() {
  PowerSearchConfig c;
  c.gamma_th = kGamma8;
  c.delta_theta = 1e-3;
  return c;
}

Scenario make_scenario(const PathLossParams& pl,
                       const LosProbabilityModel& los, double lambda,
                       const LoadModel& load, double sigma2 = 0.0) {
  Scenario s;
  s.pathloss = pl;
  s.los = los;
  s.lambda = lambda;
  s.load = load;
  s.sigma2 = sigma2;
  return s;
}

// 1-2-5 series covering [lo, hi]; matches the abscissae the reference
// curves are tabulated at, which pins down slope fits on convex curves.
std::vector<double> grid125(double lo, double hi) {
  std::vector<double> g;
  for (double dec = 1.0; dec <= hi * (1.0 + 1e-9); dec *= 10.0)
    for (double m : {1.0, 2.0, 5.0}) {
      const double v = m * dec;
      if (v >= lo * (1.0 - 1e-9) && v <= hi * (1.0 + 1e-9)) g.push_back(v);
    }
  return g;
}

std::vector<double> thresholds_11() {
  std::vector<double> th;
  for (int db = -20; db <= 30; db += 5)
    th.push_back(std::pow(10.0, db / 10.0));
  return th;
}

std::string join(const std::vector<double>& v, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// ASE per density, computed in parallel over the grid.
std::vector<std::pair<double, double>> ase_sweep(
    const LosProbabilityModel& los, const LoadModel& load,
    const std::vector<double>& grid, int threads) {
  std::vector<std::pair<double, double>> out(grid.size());
  parallel_for(static_cast<long>(grid.size()), threads, [&](long i) {
    const Scenario scn = make_scenario(dual_slope_pl(), los, grid[i], load);
    out[i] = {grid[i], ase(scn)};
  });
  return out;
}

std::vector<std::pair<double, double>> outage_sweep(
    const LosProbabilityModel& los, const LoadModel& load,
    const std::vector<double>& grid, int threads) {
  std::vector<std::pair<double, double>> out(grid.size());
  parallel_for(static_cast<long>(grid.size()), threads, [&](long i) {
    const Scenario scn = make_scenario(dual_slope_pl(), los, grid[i], load);
    out[i] = {grid[i], outage(scn, kGamma8)};
  });
  return out;
}

// Minimum TX power per density, in watts, plus the per-m^2 abscissa used
// by the fits.
std::vector<std::pair<double, double>> ptx_sweep_watts(
    const LosProbabilityModel& los, const LoadModel& load,
    const std::vector<double>& grid, int threads) {
  std::vector<std::pair<double, double>> out(grid.size());
  const PowerSearchConfig cfg = default_power_config();
  parallel_for(static_cast<long>(grid.size()), threads, [&](long i) {
    const Scenario scn = make_scenario(dual_slope_pl(), los, grid[i], load);
    const PowerResult pr = min_tx_power(scn, cfg);
    out[i] = {grid[i], std::pow(10.0, (pr.p_tx_dbm - 30.0) / 10.0)};
  });
  return out;
}

ClaimResult make_result(const std::string& id, bool pass,
                        const std::string& detail,
                        const std::string& expected) {
  ClaimResult r;
  r.id = id;
  r.pass = pass;
  r.detail = detail;
  r.expected = expected;
  return r;
}

// -------------------------------------------------------------------
// individual claims

ClaimResult claim_single_slope_invariance(const ClaimOptions& opts) {
  const std::vector<double> th = thresholds_11();
  const std::vector<double> lambdas = {10.0, 100.0, 1000.0};
  std::vector<std::vector<double>> ccdf(lambdas.size(),
                                        std::vector<double>(th.size()));
  parallel_for(static_cast<long>(lambdas.size() * th.size()), opts.threads,
               [&](long k) {
                 const size_t i = k / th.size();
                 const size_t j = k % th.size();
                 const Scenario scn = make_scenario(
                     single_slope_pl(), LosProbabilityModel::constant(1.0),
                     lambdas[i], LoadModel::fully_loaded());
                 ccdf[i][j] = sinr_ccdf(scn, th[j]);
               });
  double spread = 0.0;
  for (size_t j = 0; j < th.size(); ++j) {
    double lo = 1.0, hi = 0.0;
    for (size_t i = 0; i < lambdas.size(); ++i) {
      lo = std::min(lo, ccdf[i][j]);
      hi = std::max(hi, ccdf[i][j]);
    }
    spread = std::max(spread, hi - lo);
  }

  // beta = 4: interference-limited CCDF at 0 dB has the closed form
  // 1 / (1 + sqrt(y) (pi/2 - atan(1/sqrt(y)))) = 1 / (1 + pi/4)
  const Scenario scn4 =
      make_scenario(single_slope_pl(4.0), LosProbabilityModel::constant(1.0),
                    100.0, LoadModel::fully_loaded());
  const double v = sinr_ccdf(scn4, 1.0);
  const double closed = 1.0 / (1.0 + (M_PI / 2.0 - std::atan(1.0)));

  const bool pass = spread <= 1e-3 && std::abs(v - closed) <= 0.002;
  std::ostringstream d;
  d << "max CCDF spread across densities = " << spread
    << "; CCDF(0 dB, beta=4) = " << v << " vs closed form " << closed;
  return make_result("single-slope-invariance", pass, d.str(),
                     "spread <= 1e-3; |ccdf - closed form| <= 0.002");
}

ClaimResult claim_outage_min_location(const ClaimOptions& opts) {
  const std::vector<double> grid = grid125(1, 10000);
  bool pass = true;
  std::ostringstream d;
  for (const auto& [name, los] :
       std::vector<std::pair<std::string, LosProbabilityModel>>{
           {"exp_square", exp_square_los()}, {"exp", exp_los()}}) {
    const auto sweep =
        outage_sweep(los, LoadModel::fully_loaded(), grid, opts.threads);
    size_t best = 0;
    for (size_t i = 1; i < sweep.size(); ++i)
      if (sweep[i].second < sweep[best].second) best = i;
    const double argmin = sweep[best].first;
    pass = pass && argmin >= 50.0 && argmin <= 100.0;
    d << name << ": argmin = " << argmin << " /km2 (outage "
      << sweep[best].second << "); ";
  }
  return make_result("outage-min-location", pass, d.str(),
                     "outage minimum at lambda in [50, 100] /km2, both LOS "
                     "models");
}

ClaimResult claim_outage_high_density(const ClaimOptions& opts) {
  bool pass = true;
  std::ostringstream d;
  std::vector<std::pair<std::string, LosProbabilityModel>> models = {
      {"exp_square", exp_square_los()}, {"exp", exp_los()}};
  std::vector<double> vals(models.size());
  parallel_for(static_cast<long>(models.size()), opts.threads, [&](long i) {
    const Scenario scn = make_scenario(dual_slope_pl(), models[i].second,
                                       1e4, LoadModel::fully_loaded());
    vals[i] = outage(scn, kGamma8);
  });
  for (size_t i = 0; i < models.size(); ++i) {
    pass = pass && vals[i] >= 0.30 && vals[i] <= 0.45;
    d << models[i].first << ": outage(1e4) = " << vals[i] << "; ";
  }
  return make_result("outage-high-density", pass, d.str(),
                     "outage at lambda = 1e4 in [0.30, 0.45]");
}

bool check_slope_fits(const std::vector<std::pair<double, double>>& pts,
                      const double intervals[3][2], const double targets[3],
                      double tol, std::ostringstream& d, double fitted[3]) {
  bool pass = true;
  for (int k = 0; k < 3; ++k) {
    const PowerLawFit fit =
        fit_power_law(pts, intervals[k][0], intervals[k][1]);
    fitted[k] = fit.b;
    const bool ok = std::abs(fit.b - targets[k]) <= tol;
    pass = pass && ok;
    d << "[" << intervals[k][0] << "," << intervals[k][1]
      << "]: b = " << fit.b << (ok ? "" : " (out of band)") << "; ";
  }
  return pass;
}

ClaimResult claim_ase_slopes_full(const ClaimOptions& opts) {
  const auto pts = ase_sweep(exp_square_los(), LoadModel::fully_loaded(),
                             grid125(1, 10000), opts.threads);
  const double intervals[3][2] = {{1, 50}, {50, 500}, {500, 10000}};
  const double targets[3] = {1.15, 0.48, 0.81};
  std::ostringstream d;
  double fitted[3];
  const bool pass = check_slope_fits(pts, intervals, targets, 0.05, d, fitted);
  return make_result("ase-slopes-full", pass, d.str(),
                     "alpha = 1.15 / 0.48 / 0.81, each +/- 0.05");
}

ClaimResult claim_ase_slopes_partial(const ClaimOptions& opts) {
  const auto pts =
      ase_sweep(exp_square_los(), LoadModel::partially_loaded(1000.0),
                grid125(1, 10000), opts.threads);
  const double intervals[3][2] = {{1, 50}, {50, 500}, {500, 10000}};
  const double targets[3] = {1.15, 0.43, 0.46};
  std::ostringstream d;
  double fitted[3];
  const bool pass = check_slope_fits(pts, intervals, targets, 0.05, d, fitted);
  return make_result("ase-slopes-partial", pass, d.str(),
                     "alpha = 1.15 / 0.43 / 0.46, each +/- 0.05");
}

std::vector<double> power_grid() {
  std::vector<double> g = grid125(1, 10000);
  g.push_back(60.0);
  g.push_back(300.0);
  std::sort(g.begin(), g.end());
  return g;
}

ClaimResult claim_txpower_slopes(const ClaimOptions& opts) {
  const auto pts_km2 = ptx_sweep_watts(
      exp_square_los(), LoadModel::fully_loaded(), power_grid(), opts.threads);
  std::vector<std::pair<double, double>> pts_si;
  for (const auto& [l, w] : pts_km2) pts_si.emplace_back(l * 1e-6, w);

  const double intervals_km2[3][2] = {{1, 60}, {60, 300}, {300, 10000}};
  const double delta_target[3] = {-1.9, -3.9, -1.44};
  const double scale_target[3] = {9.3e-9, 4.4e-17, 1.15e-9};
  bool pass = true;
  std::ostringstream d;
  for (int k = 0; k < 3; ++k) {
    const PowerLawFit fit = fit_power_law(pts_si, intervals_km2[k][0] * 1e-6,
                                          intervals_km2[k][1] * 1e-6);
    const bool d_ok = std::abs(fit.b - delta_target[k]) <= 0.15;
    const double ratio = fit.a / scale_target[k];
    const bool a_ok = ratio <= 3.0 && ratio >= 1.0 / 3.0;
    pass = pass && d_ok && a_ok;
    d << "[" << intervals_km2[k][0] << "," << intervals_km2[k][1]
      << "] /km2: delta = " << fit.b << (d_ok ? "" : " (out of band)")
      << ", P_T = " << fit.a << " W (x" << ratio << " of target"
      << (a_ok ? "" : ", out of band") << "); ";
  }
  return make_result("txpower-slopes", pass, d.str(),
                     "delta = -1.9 / -3.9 / -1.44 +/- 0.15; scale within "
                     "factor 3 of 9.3e-9 / 4.4e-17 / 1.15e-9 W (per m^2)");
}

ClaimResult claim_ee_optimum_full(const ClaimOptions& opts) {
  const std::vector<double> agrid = grid125(1, 10000);
  const auto ase_pts = ase_sweep(exp_square_los(), LoadModel::fully_loaded(),
                                 agrid, opts.threads);
  const auto ptx_pts = ptx_sweep_watts(
      exp_square_los(), LoadModel::fully_loaded(), power_grid(), opts.threads);
  std::map<double, double> ptx_of;
  for (const auto& [l, w] : ptx_pts) ptx_of[l] = w;

  PowerConsumptionModel pc;
  pc.p0_watts = kP0;
  pc.k_rf = kKrf;
  pc.rho = 0.5;  // irrelevant when every BS is active

  size_t best = 0;
  std::vector<double> ee(agrid.size());
  for (size_t i = 0; i < agrid.size(); ++i) {
    const double lambda = agrid[i];
    const double ptot =
        total_power(pc, 1.0, lambda, lambda, ptx_of.at(lambda));
    ee[i] = energy_efficiency(kBandwidthHz * ase_pts[i].second, ptot);
    if (ee[i] > ee[best]) best = i;
  }
  const double argmax = agrid[best];

  // closed-form optimum from the (alpha, delta) pair whose result lands
  // inside its own fit interval
  std::vector<std::pair<double, double>> ptx_si;
  for (const auto& [l, w] : ptx_pts) ptx_si.emplace_back(l * 1e-6, w);
  const double ase_iv[3][2] = {{1, 50}, {50, 500}, {500, 10000}};
  const double ptx_iv[3][2] = {{1, 60}, {60, 300}, {300, 10000}};
  double lambda0_km2 = NAN;
  for (int k = 0; k < 3; ++k) {
    const PowerLawFit af = fit_power_law(ase_pts, ase_iv[k][0], ase_iv[k][1]);
    const PowerLawFit pf =
        fit_power_law(ptx_si, ptx_iv[k][0] * 1e-6, ptx_iv[k][1] * 1e-6);
    const RegimeClassification rc =
        classify_regime(af.b, pf.b, kP0, kKrf, pf.a);
    if (rc.kind != RegimeClassification::Kind::InteriorMaximum) continue;
    const double cand = rc.lambda0 * 1e6;
    if (cand >= ase_iv[k][0] && cand <= ase_iv[k][1]) lambda0_km2 = cand;
  }

  const double lo_neighbor = best > 0 ? agrid[best - 1] : 0.0;
  const double hi_neighbor =
      best + 1 < agrid.size() ? agrid[best + 1] : INFINITY;
  const bool pass = argmax >= 70.0 && argmax <= 150.0 &&
                    std::isfinite(lambda0_km2) &&
                    lambda0_km2 >= lo_neighbor && lambda0_km2 <= hi_neighbor;
  std::ostringstream d;
  d << "argmax = " << argmax << " /km2; closed-form lambda0 = " << lambda0_km2
    << " /km2 (grid neighbors " << lo_neighbor << ", " << hi_neighbor << ")";
  return make_result("ee-optimum-full", pass, d.str(),
                     "argmax in [70, 150] /km2; lambda0 within one grid step");
}

ClaimResult claim_ee_optimum_partial(const ClaimOptions& opts) {
  const double lambda_u = 1000.0;
  const LoadModel load = LoadModel::partially_loaded(lambda_u);

  // fit abscissae (1-2-5 series, as in the slope claims) plus a denser
  // set above lambda_U for the exact-curve shape checks
  const std::vector<double> fit_grid = grid125(1, 10000);
  std::vector<double> dense = {1000, 1250, 1600, 2000, 2500, 3150,
                               4000, 5000, 6300, 8000, 10000};

  const auto fit_pts =
      ase_sweep(exp_square_los(), load, fit_grid, opts.threads);
  const auto dense_pts = ase_sweep(exp_square_los(), load, dense, opts.threads);
  const auto dense_ptx =
      ptx_sweep_watts(exp_square_los(), load, dense, opts.threads);

  const PowerLawFit fit = fit_power_law(fit_pts, 500.0, 10000.0);
  const double alpha = fit.b;
  const double rho1 = 0.1;
  const PartialOptimum po = optimal_density_partial(alpha, lambda_u, rho1);
  const bool band_ok = po.lambda_star >= 6500.0 && po.lambda_star <= 8500.0;

  // approximate efficiency built from the fitted power law, with the
  // stand-by-dominated consumption model; dense log grid argmax
  double best_l = 0.0, best_v = -1.0;
  for (int i = 0; i <= 400; ++i) {
    const double l = 1000.0 * std::pow(30.0, i / 400.0);
    const double t = fit.a * std::pow(l, alpha) * kBandwidthHz;
    const double p = lambda_u * (1.0 - rho1) * kP0 + l * rho1 * kP0;
    const double v = t / p;
    if (v > best_v) {
      best_v = v;
      best_l = l;
    }
  }
  const bool argmax_ok =
      std::abs(best_l - po.lambda_star) <= 0.15 * po.lambda_star;

  // exact efficiency for the higher stand-by fractions: no interior
  // maximum above lambda_U
  bool no_interior = true;
  std::ostringstream tails;
  for (double rho : {0.3, 0.6}) {
    PowerConsumptionModel pc;
    pc.p0_watts = kP0;
    pc.k_rf = kKrf;
    pc.rho = rho;
    size_t am = 0;
    std::vector<double> ee(dense.size());
    for (size_t i = 0; i < dense.size(); ++i) {
      const double l = dense[i];
      const double la = prob_active(l, lambda_u) * l;
      const double ptot = total_power(pc, 1.0, l, la, dense_ptx[i].second);
      ee[i] = energy_efficiency(kBandwidthHz * dense_pts[i].second, ptot);
      if (ee[i] > ee[am]) am = i;
    }
    tails << "rho=" << rho << " argmax=" << dense[am] << " /km2; ";
    no_interior = no_interior && am == 0;
  }

  const bool pass = band_ok && argmax_ok && no_interior;
  std::ostringstream d;
  d << "alpha[500,1e4] = " << alpha << "; lambda* = " << po.lambda_star
    << " /km2" << (band_ok ? "" : " (out of band)")
    << (po.reliable ? " [reliable]" : " [unreliable]")
    << "; approx-curve argmax = " << best_l << " /km2; " << tails.str();
  return make_result("ee-optimum-partial", pass, d.str(),
                     "lambda* in [6500, 8500]; approx argmax within 15%; no "
                     "interior maximum above lambda_U for rho in {0.3, 0.6}");
}

ClaimResult claim_analytic_mc_equivalence(const ClaimOptions& opts) {
  struct Cfg {
    std::string name;
    LosProbabilityModel los;
    LoadModel load;
    double lambda;
  };
  const std::vector<Cfg> cfgs = {
      {"exp_square/full", exp_square_los(), LoadModel::fully_loaded(), 100.0},
      {"exp/full", exp_los(), LoadModel::fully_loaded(), 100.0},
      {"exp_square/reuse2", exp_square_los(), LoadModel::frequency_reuse(2),
       100.0},
      {"exp/reuse2", exp_los(), LoadModel::frequency_reuse(2), 100.0},
      {"exp_square/partial", exp_square_los(),
       LoadModel::partially_loaded(1000.0), 1000.0},
  };
  const std::vector<double> th = thresholds_11();
  bool pass = true;
  std::ostringstream d;
  for (const auto& c : cfgs) {
    const Scenario scn = make_scenario(dual_slope_pl(), c.los, c.lambda,
                                       c.load);
    std::vector<double> analytic(th.size());
    parallel_for(static_cast<long>(th.size()), opts.threads, [&](long j) {
      analytic[j] = sinr_ccdf(scn, th[j]);
    });
    SimConfig sim;
    sim.scenario = scn;
    sim.drops = opts.mc_drops;
    sim.seed = opts.seed;
    sim.threads = opts.threads;
    const EmpiricalStats st = simulate_sinr(sim, th);
    double worst = 0.0;
    for (size_t j = 0; j < th.size(); ++j)
      worst = std::max(worst, std::abs(analytic[j] - st.ccdf[j]));
    pass = pass && worst <= 0.01;
    d << c.name << ": max |analytic - MC| = " << worst << "; ";
  }
  return make_result("analytic-mc-equivalence", pass, d.str(),
                     "max absolute CCDF gap <= 0.01 at 11 thresholds, 5 "
                     "configurations");
}

ClaimResult claim_pa_formula(const ClaimOptions& opts) {
  const double lambda_u = 100.0;
  struct Case {
    double lambda;
    long drops;
  };
  const std::vector<Case> cases = {{10.0, 4000}, {100.0, 1500},
                                   {1000.0, 400}};
  bool pass = true;
  std::ostringstream d;
  for (const auto& c : cases) {
    const double model = prob_active(c.lambda, lambda_u);
    const ActiveFraction mc = simulate_active_fraction(
        c.lambda, lambda_u, 1.0, c.drops, opts.seed, opts.threads);
    const double gap = std::abs(model - mc.value);
    pass = pass && gap <= 0.02;
    d << "lambda/lambda_U=" << c.lambda / lambda_u << ": model = " << model
      << ", MC = " << mc.value << " (+/-" << mc.half_width << "); ";
  }
  return make_result("pa-formula", pass, d.str(),
                     "|model - MC| <= 0.02 at ratio in {0.1, 1, 10}");
}

ClaimResult claim_distance_law_invariants(const ClaimOptions& opts) {
  struct ModelCase {
    std::string name;
    LosProbabilityModel los;
  };
  // The closed-form laws admit a tight finite-difference probe of
  // pdf = -dP/dR.  The quadrature-backed generic law does not: adaptive
  // subdivision adds ~1e-7 absolute noise to the tail, which any usable
  // step amplifies past 1e-5.  For it the same invariant is checked in
  // integral form, int_{R1}^{R2} pdf = P(R1) - P(R2), which is exact and
  // insensitive to pointwise noise (the pdf uses the Leibniz-rule
  // derivative, so integrating it back is an independent verification).
  const std::vector<ModelCase> models = {{"exp_square", exp_square_los()},
                                         {"exp", exp_los()},
                                         {"three_gpp", three_gpp_los()}};
  const std::vector<double> lambdas = {10.0, 100.0, 1000.0};
  const PathLossParams pl = dual_slope_pl();

  bool pass = true;
  std::ostringstream d;
  std::vector<std::string> details(models.size() * lambdas.size());
  std::vector<char> oks(models.size() * lambdas.size(), 1);
  parallel_for(static_cast<long>(models.size() * lambdas.size()),
               opts.threads, [&](long idx) {
    const ModelCase& m = models[idx / lambdas.size()];
    const double lambda = lambdas[idx % lambdas.size()];
    const DistanceLaw law(lambda, pl, m.los);
    const double r12 = law.tail_radius(1e-12);
    const double norm = integrate_or_throw(
        [&law](double R) { return R <= 0.0 ? 0.0 : law.pdf(R); }, 0.0, r12,
        1e-9, 1e-9, 4000);
    const bool norm_ok = std::abs(norm - 1.0) <= 1e-6;

    // bulk of the distribution for the derivative probe
    auto radius_at_tail = [&law, r12](double tail) {
      double lo = 1e-9, hi = r12;
      for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (law.tail_probability(mid) > tail ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    };
    double worst_rel = 0.0;
    bool deriv_ok = true;
    if (m.name == "three_gpp") {
      const double levels[5] = {0.99, 0.9, 0.5, 0.1, 0.01};
      double edges[5];
      for (int i = 0; i < 5; ++i) edges[i] = radius_at_tail(levels[i]);
      for (int i = 0; i + 1 < 5; ++i) {
        const double mass = integrate_or_throw(
            [&law](double R) { return law.pdf(R); }, edges[i], edges[i + 1],
            1e-10, 1e-10, 4000);
        const double delta = law.tail_probability(edges[i]) -
                             law.tail_probability(edges[i + 1]);
        worst_rel = std::max(worst_rel, std::abs(mass - delta) / delta);
      }
      deriv_ok = worst_rel <= 1e-5;
    } else {
      const double r_lo = radius_at_tail(0.99);
      const double r_hi = radius_at_tail(0.01);
      const double h = 1e-6;
      for (int i = 0; i <= 20; ++i) {
        const double R = r_lo * std::pow(r_hi / r_lo, i / 20.0);
        if (R <= 2.0 * h) continue;
        const double fd =
            (law.tail_probability(R - h) - law.tail_probability(R + h)) /
            (2.0 * h);
        const double p = law.pdf(R);
        worst_rel = std::max(worst_rel, std::abs(fd - p) / std::abs(p));
      }
      deriv_ok = worst_rel <= 1e-5;
    }
    oks[idx] = norm_ok && deriv_ok;
    std::ostringstream ds;
    ds << m.name << "@" << lambda << ": norm err = " << std::abs(norm - 1.0)
       << ", max derivative rel err = " << worst_rel << "; ";
    details[idx] = ds.str();
  });
  for (size_t i = 0; i < details.size(); ++i) {
    pass = pass && oks[i];
    d << details[i];
  }
  return make_result("distance-law-invariants", pass, d.str(),
                     "normalization within 1e-6; pdf vs -dP/dR within 1e-5 "
                     "relative (finite differences for the closed-form laws, "
                     "interval-mass identity for the quadrature-backed law), "
                     "3 LOS models x 3 densities");
}

ClaimResult claim_reuse_tradeoff(const ClaimOptions& opts) {
  bool pass = true;
  std::ostringstream d;
  for (double lambda : {100.0, 1000.0}) {
    std::vector<double> cov(3), ase_v(3);
    parallel_for(3, opts.threads, [&](long k) {
      const int n = static_cast<int>(k) + 1;
      const LoadModel load =
          n == 1 ? LoadModel::fully_loaded() : LoadModel::frequency_reuse(n);
      const Scenario scn =
          make_scenario(dual_slope_pl(), exp_square_los(), lambda, load);
      cov[k] = sinr_ccdf(scn, kGamma8);
      ase_v[k] = ase(scn);
    });
    const bool cov_ok = cov[2] > cov[1] && cov[1] > cov[0];
    const bool ase_ok = ase_v[2] < ase_v[1] && ase_v[1] < ase_v[0];
    pass = pass && cov_ok && ase_ok;
    d << "lambda=" << lambda << ": coverage N=1..3 = " << join(cov)
      << "; ASE = " << join(ase_v) << "; ";
  }
  return make_result("reuse-tradeoff", pass, d.str(),
                     "coverage increasing and ASE decreasing in the reuse "
                     "factor at lambda in {100, 1000}");
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "single-slope-invariance", "outage-min-location",
      "outage-high-density",     "ase-slopes-full",
      "ase-slopes-partial",      "txpower-slopes",
      "ee-optimum-full",         "ee-optimum-partial",
      "analytic-mc-equivalence", "pa-formula",
      "distance-law-invariants", "reuse-tradeoff"};
  return ids;
}

ClaimResult run_claim(const std::string& id, const ClaimOptions& opts) {
  if (id == "single-slope-invariance")
    return claim_single_slope_invariance(opts);
  if (id == "outage-min-location") return claim_outage_min_location(opts);
  if (id == "outage-high-density") return claim_outage_high_density(opts);
  if (id == "ase-slopes-full") return claim_ase_slopes_full(opts);
  if (id == "ase-slopes-partial") return claim_ase_slopes_partial(opts);
  if (id == "txpower-slopes") return claim_txpower_slopes(opts);
  if (id == "ee-optimum-full") return claim_ee_optimum_full(opts);
  if (id == "ee-optimum-partial") return claim_ee_optimum_partial(opts);
  if (id == "analytic-mc-equivalence")
    return claim_analytic_mc_equivalence(opts);
  if (id == "pa-formula") return claim_pa_formula(opts);
  if (id == "distance-law-invariants")
    return claim_distance_law_invariants(opts);
  if (id == "reuse-tradeoff") return claim_reuse_tradeoff(opts);
  throw std::invalid_argument("unknown claim id: " + id);
}

std::vector<ClaimResult> run_all_claims(const ClaimOptions& opts) {
  std::vector<ClaimResult> out;
  for (const auto& id : claim_ids()) {
    try {
      out.push_back(run_claim(id, opts));
    } catch (const std::exception& e) {
      out.push_back(make_result(id, false,
                                std::string("engine error: ") + e.what(),
                                ""));
    }
  }
  return out;
}

std::string claims_json_report(const std::vector<ClaimResult>& results) {
  std::ostringstream os;
  os << "[\n";
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    auto esc = [](const std::string& s) {
      std::string o;
      for (char c : s) {
        if (c == '"' || c == '\\') o.push_back('\\');
        o.push_back(c);
      }
      return o;
    };
    os << "  {\"id\": \"" << esc(r.id) << "\", \"pass\": "
       << (r.pass ? "true" : "false") << ", \"detail\": \"" << esc(r.detail)
       << "\", \"expected\": \"" << esc(r.expected) << "\"}"
       << (i + 1 < results.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

}  // namespace udn
