// SPDX-License-Identifier: Apache-2.0

#include "udn/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace udn {

using nlohmann::json;

Scenario ExperimentConfig::scenario(double lambda_per_km2) const {
  Scenario s;
  s.pathloss = pathloss;
  s.los = los;
  s.fading = fading;
  s.lambda = lambda_per_km2;
  s.load = load;
  s.sigma2 = sigma2;
  return s;
}

std::string ConfigDiagnostics::joined() const {
  std::ostringstream os;
  for (const auto& e : errors) os << e << "\n";
  return os.str();
}

namespace {

double require_number(const json& j, const std::string& path,
                      const std::string& key, ConfigDiagnostics& diag,
                      double fallback) {
  if (!j.contains(key)) {
    diag.errors.push_back(path + "." + key + ": missing required field");
    return fallback;
  }
  if (!j[key].is_number()) {
    diag.errors.push_back(path + "." + key + ": expected a number");
    return fallback;
  }
  return j[key].get<double>();
}

double optional_number(const json& j, const std::string& path,
                       const std::string& key, ConfigDiagnostics& diag,
                       double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    diag.errors.push_back(path + "." + key + ": expected a number");
    return fallback;
  }
  return j[key].get<double>();
}

void check_positive(double v, const std::string& what,
                    ConfigDiagnostics& diag) {
  if (!(v > 0.0)) diag.errors.push_back(what + ": must be positive");
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text,
                              ConfigDiagnostics& diag) {
  ExperimentConfig cfg;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    diag.errors.push_back(std::string("invalid JSON: ") + e.what());
    return cfg;
  }

  if (j.contains("propagation")) {
    const json& p = j["propagation"];
    const double pl_l =
        require_number(p, "propagation", "pathloss_1km_los_db", diag, 103.8);
    const double b_l =
        require_number(p, "propagation", "exponent_los", diag, 2.09);
    const double pl_n =
        require_number(p, "propagation", "pathloss_1km_nlos_db", diag, 145.4);
    const double b_n =
        require_number(p, "propagation", "exponent_nlos", diag, 3.75);
    if (!(b_l > 0.0) || !(b_n >= b_l))
      diag.errors.push_back(
          "propagation: exponents must satisfy exponent_nlos >= exponent_los "
          "> 0");
    else
      cfg.pathloss = PathLossParams::from_db(pl_l, b_l, pl_n, b_n);
  }

  if (j.contains("los_model")) {
    const json& m = j["los_model"];
    const std::string type = m.value("type", "");
    try {
      if (type == "three_gpp")
        cfg.los = LosProbabilityModel::three_gpp(
            require_number(m, "los_model", "d0_km", diag, 0.156),
            require_number(m, "los_model", "d1_km", diag, 0.03));
      else if (type == "exp_square")
        cfg.los = LosProbabilityModel::exp_square(
            require_number(m, "los_model", "scale_km", diag, 0.0825));
      else if (type == "exp")
        cfg.los = LosProbabilityModel::exponential(
            require_number(m, "los_model", "scale_km", diag, 0.0825));
      else if (type == "constant")
        cfg.los = LosProbabilityModel::constant(
            require_number(m, "los_model", "p", diag, 1.0));
      else
        diag.errors.push_back(
            "los_model.type: expected three_gpp|exp_square|exp|constant");
    } catch (const std::exception& e) {
      diag.errors.push_back(std::string("los_model: ") + e.what());
    }
  }

  cfg.fading.mu = optional_number(j, "", "fading_mu", diag, 1.0);
  if (!(cfg.fading.mu > 0.0))
    diag.errors.push_back("fading_mu: must be positive");

  if (j.contains("densities_per_km2")) {
    const json& d = j["densities_per_km2"];
    if (d.is_array()) {
      for (const auto& v : d) {
        if (!v.is_number() || !(v.get<double>() > 0.0)) {
          diag.errors.push_back(
              "densities_per_km2: entries must be positive numbers");
          break;
        }
        cfg.densities_per_km2.push_back(v.get<double>());
      }
    } else if (d.is_object()) {
      const double lo =
          require_number(d, "densities_per_km2", "min_per_km2", diag, 1.0);
      const double hi =
          require_number(d, "densities_per_km2", "max_per_km2", diag, 1.0);
      const double pts =
          require_number(d, "densities_per_km2", "points", diag, 0.0);
      if (!(lo > 0.0) || !(hi > lo) || !(pts >= 2))
        diag.errors.push_back(
            "densities_per_km2: need 0 < min < max and points >= 2");
      else
        for (int i = 0; i < (int)pts; ++i)
          cfg.densities_per_km2.push_back(
              lo * std::pow(hi / lo, i / (pts - 1.0)));
    } else {
      diag.errors.push_back("densities_per_km2: expected array or range");
    }
  }
  if (cfg.densities_per_km2.empty())
    diag.errors.push_back("densities_per_km2: density list must not be empty");

  if (j.contains("load")) {
    const json& l = j["load"];
    const std::string type = l.value("type", "fully_loaded");
    try {
      if (type == "fully_loaded")
        cfg.load = LoadModel::fully_loaded();
      else if (type == "partially_loaded")
        cfg.load = LoadModel::partially_loaded(
            require_number(l, "load", "lambda_u_per_km2", diag, 0.0));
      else if (type == "frequency_reuse")
        cfg.load = LoadModel::frequency_reuse(static_cast<int>(
            require_number(l, "load", "n", diag, 1.0)));
      else
        diag.errors.push_back(
            "load.type: expected fully_loaded|partially_loaded|"
            "frequency_reuse");
    } catch (const std::exception& e) {
      diag.errors.push_back(std::string("load: ") + e.what());
    }
    // the partial-load model and frequency reuse are modeled separately;
    // their combination is rejected rather than silently multiplied
    if (cfg.load.kind == LoadModel::Kind::PartiallyLoaded &&
        l.contains("n") && l["n"].is_number() && l["n"].get<double>() > 1)
      diag.errors.push_back(
          "load: partially_loaded cannot be combined with a reuse factor");
  }

  cfg.sigma2 = optional_number(j, "", "sigma2_norm", diag, 0.0);
  if (cfg.sigma2 < 0.0)
    diag.errors.push_back("sigma2_norm: must be nonnegative");

  if (j.contains("power_search")) {
    const json& p = j["power_search"];
    cfg.power_enabled = p.value("enabled", true);
    const double gdb =
        optional_number(p, "power_search", "gamma_th_db", diag, -8.0);
    cfg.power.gamma_th = std::pow(10.0, gdb / 10.0);
    cfg.power.delta_theta =
        optional_number(p, "power_search", "delta_theta", diag, 1e-3);
    cfg.power.bandwidth_hz =
        optional_number(p, "power_search", "bandwidth_hz", diag, 10e6);
    cfg.power.noise_figure_db =
        optional_number(p, "power_search", "noise_figure_db", diag, 9.0);
    cfg.power.noise_psd_dbm_hz =
        optional_number(p, "power_search", "noise_psd_dbm_hz", diag, -174.0);
    if (p.contains("steps_db")) {
      cfg.power.steps_db.clear();
      for (const auto& s : p["steps_db"])
        if (s.is_number()) cfg.power.steps_db.push_back(s.get<double>());
    }
    try {
      cfg.power.validate();
    } catch (const std::exception& e) {
      diag.errors.push_back(std::string("power_search: ") + e.what());
    }
  }

  if (j.contains("energy")) {
    const json& e = j["energy"];
    cfg.energy_enabled = e.value("enabled", true);
    cfg.energy.p0_watts = optional_number(e, "energy", "p0_watts", diag, 10.0);
    cfg.energy.k_rf = optional_number(e, "energy", "k_rf", diag, 10.0);
    cfg.energy.rho = optional_number(e, "energy", "rho", diag, 0.5);
    cfg.area_km2 = optional_number(e, "energy", "area_km2", diag, 1.0);
    cfg.bandwidth_hz =
        optional_number(e, "energy", "bandwidth_hz", diag, 10e6);
    check_positive(cfg.area_km2, "energy.area_km2", diag);
    check_positive(cfg.bandwidth_hz, "energy.bandwidth_hz", diag);
    try {
      cfg.energy.validate();
    } catch (const std::exception& ex) {
      diag.errors.push_back(std::string("energy: ") + ex.what());
    }
  }

  if (j.contains("monte_carlo")) {
    const json& m = j["monte_carlo"];
    cfg.mc_enabled = m.value("enabled", true);
    cfg.mc_drops = static_cast<long>(
        optional_number(m, "monte_carlo", "drops", diag, 200000.0));
    if (cfg.mc_drops <= 0)
      diag.errors.push_back("monte_carlo.drops: must be positive");
    cfg.seed = static_cast<std::uint64_t>(
        optional_number(m, "monte_carlo", "seed", diag, 1.0));
    cfg.disk_radius_km =
        optional_number(m, "monte_carlo", "disk_radius_km", diag, 0.0);
    if (cfg.disk_radius_km < 0.0)
      diag.errors.push_back("monte_carlo.disk_radius_km: must be >= 0");
  }

  if (j.contains("output") && j["output"].contains("dir"))
    cfg.out_dir = j["output"]["dir"].get<std::string>();

  return cfg;
}

ExperimentConfig load_config_file(const std::string& path,
                                  ConfigDiagnostics& diag) {
  std::ifstream in(path);
  if (!in) {
    diag.errors.push_back("cannot open config file: " + path);
    return ExperimentConfig{};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), diag);
}

}  // namespace udn
