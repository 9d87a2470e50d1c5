// SPDX-License-Identifier: Apache-2.0

#include "udn/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "udn/montecarlo.hpp"
#include "udn/parallel.hpp"

namespace udn {
namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, int threads) {
  const size_t n = cfg.densities_per_km2.size();
  std::vector<SweepRow> rows(n);
  parallel_for(static_cast<long>(n), threads, [&](long i) {
    SweepRow& row = rows[i];
    const double lambda = cfg.densities_per_km2[i];
    row.lambda = lambda;
    try {
      const Scenario scn = cfg.scenario(lambda);
      row.lambda_a = active_density(cfg.load, lambda);
      row.lambda_i = interferer_density(cfg.load, lambda);
      row.outage = outage(scn, cfg.power.gamma_th);
      const SpectralEfficiency se = avg_spectral_efficiency(scn);
      row.avg_se = se.value;
      row.se_cap_hit = se.cap_hit;
      row.ase = row.lambda_a * se.value / cfg.load.reuse_factor();

      if (cfg.power_enabled) {
        const PowerResult pr = min_tx_power(scn, cfg.power);
        row.ptx_dbm = pr.p_tx_dbm;
      }
      if (cfg.energy_enabled) {
        const double p_tx_w =
            cfg.power_enabled ? std::pow(10.0, (row.ptx_dbm - 30.0) / 10.0)
                              : 0.0;
        row.ptot_w = total_power(cfg.energy, cfg.area_km2, lambda,
                                 row.lambda_a, p_tx_w);
        const double throughput =
            cfg.area_km2 * cfg.bandwidth_hz * row.ase;
        row.ee_bit_per_joule = energy_efficiency(throughput, row.ptot_w);
      }
      if (cfg.mc_enabled) {
        SimConfig sim;
        sim.scenario = scn;
        sim.drops = cfg.mc_drops;
        sim.seed = cfg.seed;
        sim.disk_radius_km = cfg.disk_radius_km;
        sim.threads = 1;  // rows already run in parallel
        const EmpiricalStats st =
            simulate_sinr(sim, {cfg.power.gamma_th});
        row.mc_outage = 1.0 - st.ccdf[0];
        row.mc_outage_hw = st.half_width[0];
        row.mc_avg_se = st.mean_log2_rate;
        row.mc_avg_se_hw = st.rate_half_width;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# schema_version," << kCsvSchemaVersion << "\n";
  os << "lambda_per_km2,lambda_a_per_km2,lambda_i_per_km2,outage,"
        "avg_se_bps_hz,se_cap_hit,ase_bps_hz_km2,ptx_dbm,ptot_w,"
        "ee_bit_per_joule,mc_outage,mc_outage_hw,mc_avg_se_bps_hz,"
        "mc_avg_se_hw,error\n";
  for (const auto& r : rows) {
    os << fmt(r.lambda) << ',' << fmt(r.lambda_a) << ',' << fmt(r.lambda_i)
       << ',' << fmt(r.outage) << ',' << fmt(r.avg_se) << ','
       << (r.se_cap_hit ? 1 : 0) << ',' << fmt(r.ase) << ','
       << fmt(r.ptx_dbm) << ',' << fmt(r.ptot_w) << ','
       << fmt(r.ee_bit_per_joule) << ',' << fmt(r.mc_outage) << ','
       << fmt(r.mc_outage_hw) << ',' << fmt(r.mc_avg_se) << ','
       << fmt(r.mc_avg_se_hw) << ',' << r.error << "\n";
  }
  return os.str();
}

std::vector<SweepRow> csv_to_rows(const std::string& csv_text) {
  std::vector<SweepRow> rows;
  std::istringstream is(csv_text);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("schema_version") == std::string::npos)
        throw std::runtime_error("CSV missing schema_version header");
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // column header row
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < 14) throw std::runtime_error("short CSV row");
    auto num = [](const std::string& s) {
      return s == "nan" ? NAN : std::stod(s);
    };
    SweepRow r;
    r.lambda = num(cells[0]);
    r.lambda_a = num(cells[1]);
    r.lambda_i = num(cells[2]);
    r.outage = num(cells[3]);
    r.avg_se = num(cells[4]);
    r.se_cap_hit = cells[5] == "1";
    r.ase = num(cells[6]);
    r.ptx_dbm = num(cells[7]);
    r.ptot_w = num(cells[8]);
    r.ee_bit_per_joule = num(cells[9]);
    r.mc_outage = num(cells[10]);
    r.mc_outage_hw = num(cells[11]);
    r.mc_avg_se = num(cells[12]);
    r.mc_avg_se_hw = num(cells[13]);
    if (cells.size() > 14) r.error = cells[14];
    rows.push_back(r);
  }
  return rows;
}

std::string fit_report(const std::vector<SweepRow>& rows,
                       const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "power-law fits (f = a * z^b, log-log least squares)\n";

  std::vector<std::pair<double, double>> ase_pts, ptx_pts_si;
  for (const auto& r : rows) {
    if (!std::isnan(r.ase)) ase_pts.emplace_back(r.lambda, r.ase);
    if (!std::isnan(r.ptx_dbm))
      // density per m^2 and power in watts: the only unit pairing under
      // which the fitted scale feeds the closed-form optimum directly
      ptx_pts_si.emplace_back(r.lambda * 1e-6,
                              std::pow(10.0, (r.ptx_dbm - 30.0) / 10.0));
  }

  const double ase_intervals[3][2] = {{1, 50}, {50, 500}, {500, 10000}};
  PowerLawFit ase_fit[3];
  bool have_ase[3] = {false, false, false};
  for (int k = 0; k < 3; ++k) {
    try {
      ase_fit[k] =
          fit_power_law(ase_pts, ase_intervals[k][0], ase_intervals[k][1]);
      have_ase[k] = true;
      os << "  ase   [" << ase_intervals[k][0] << "," << ase_intervals[k][1]
         << "] /km2 : alpha=" << fmt(ase_fit[k].b)
         << " a=" << fmt(ase_fit[k].a)
         << " residual=" << fmt(ase_fit[k].residual) << "\n";
    } catch (const std::exception&) {
    }
  }

  const double ptx_intervals[3][2] = {{1, 60}, {60, 300}, {300, 10000}};
  PowerLawFit ptx_fit[3];
  bool have_ptx[3] = {false, false, false};
  for (int k = 0; k < 3; ++k) {
    try {
      ptx_fit[k] = fit_power_law(ptx_pts_si, ptx_intervals[k][0] * 1e-6,
                                 ptx_intervals[k][1] * 1e-6);
      have_ptx[k] = true;
      os << "  ptx   [" << ptx_intervals[k][0] << "," << ptx_intervals[k][1]
         << "] /km2 : delta=" << fmt(ptx_fit[k].b)
         << " P_T=" << fmt(ptx_fit[k].a) << " W (density per m^2)"
         << " residual=" << fmt(ptx_fit[k].residual) << "\n";
    } catch (const std::exception&) {
    }
  }

  if (cfg.energy_enabled) {
    os << "optima:\n";
    for (int k = 0; k < 3; ++k) {
      if (!have_ase[k] || !have_ptx[k]) continue;
      try {
        const RegimeClassification rc =
            classify_regime(ase_fit[k].b, ptx_fit[k].b, cfg.energy.p0_watts,
                            cfg.energy.k_rf, ptx_fit[k].a);
        if (rc.kind == RegimeClassification::Kind::InteriorMaximum) {
          const double l0_km2 = rc.lambda0 * 1e6;
          const bool self_consistent = l0_km2 >= ase_intervals[k][0] &&
                                       l0_km2 <= ase_intervals[k][1];
          os << "  lambda0 (interval " << k << ") = " << fmt(l0_km2)
             << " /km2" << (self_consistent ? " [self-consistent]" : "")
             << "\n";
        }
      } catch (const std::exception&) {
      }
    }
    if (cfg.load.kind == LoadModel::Kind::PartiallyLoaded && have_ase[2]) {
      try {
        const PartialOptimum po = optimal_density_partial(
            ase_fit[2].b, cfg.load.lambda_u, cfg.energy.rho);
        os << "  lambda* = " << fmt(po.lambda_star) << " /km2"
           << (po.reliable ? " [reliable]" : " [unreliable: <= 3*lambda_U]")
           << "\n";
      } catch (const std::exception&) {
      }
    }
  }
  return os.str();
}

}  // namespace udn
