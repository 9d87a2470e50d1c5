// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: config validation, density sweeps, Monte
// Carlo runs, minimum-power curves, energy reports, regression fits on
// existing CSVs, and the claims suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "udn/claims.hpp"
#include "udn/sweep.hpp"

namespace fs = std::filesystem;

namespace {

int write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "."
                                                    : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  out << content;
  return 0;
}

int run_sweep_command(const std::string& config_path, const std::string& out,
                      int threads, long mc_drops_override,
                      std::uint64_t seed_override, bool force_mc,
                      bool force_power, bool force_energy) {
  udn::ConfigDiagnostics diag;
  udn::ExperimentConfig cfg = udn::load_config_file(config_path, diag);
  if (!diag.ok()) {
    std::cerr << diag.joined();
    return 1;
  }
  if (mc_drops_override > 0) cfg.mc_drops = mc_drops_override;
  if (seed_override != 0) cfg.seed = seed_override;
  if (force_mc) cfg.mc_enabled = true;
  if (force_power) cfg.power_enabled = true;
  if (force_energy) {
    cfg.power_enabled = true;
    cfg.energy_enabled = true;
  }
  const std::string out_dir = out.empty() ? cfg.out_dir : out;

  const auto rows = udn::run_sweep(cfg, threads);
  if (write_file(fs::path(out_dir) / "results.csv", udn::rows_to_csv(rows)))
    return 1;
  if (write_file(fs::path(out_dir) / "fit_report.txt",
                 udn::fit_report(rows, cfg)))
    return 1;
  int failures = 0;
  for (const auto& r : rows)
    if (!r.error.empty()) {
      ++failures;
      std::cerr << "density " << r.lambda << ": " << r.error << "\n";
    }
  std::cout << "wrote " << (fs::path(out_dir) / "results.csv").string()
            << " (" << rows.size() - failures << "/" << rows.size()
            << " densities ok)\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ultra-dense network coverage / rate / power / energy engine"};
  app.require_subcommand(1);

  std::string config_path, out_dir, csv_in, claim_id, report_path;
  int threads = 0;
  long mc_drops = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path, "JSON config file");
    if (needs_config) opt->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads (0 = all cores)");
    sub->add_option("--seed", seed, "override master seed");
    sub->add_option("--mc-drops", mc_drops, "override Monte Carlo drops");
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "validate a config file and print diagnostics");
  add_common(validate, true);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "analytical density sweep (plus whatever the config enables)");
  add_common(sweep, true);

  CLI::App* mc = app.add_subcommand(
      "mc", "Monte Carlo sweep alongside the analytical columns");
  add_common(mc, true);

  CLI::App* power = app.add_subcommand(
      "power", "minimum transmit-power curve over the density sweep");
  add_common(power, true);

  CLI::App* energy = app.add_subcommand(
      "energy", "energy-efficiency sweep with closed-form optima report");
  add_common(energy, true);

  CLI::App* fit = app.add_subcommand(
      "fit", "power-law fit report from an existing results CSV");
  fit->add_option("--in", csv_in, "results.csv produced by sweep")->required();
  fit->add_option("--config", config_path, "config for model constants");
  fit->add_option("--out", out_dir, "output directory");

  CLI::App* claims = app.add_subcommand(
      "claims", "run the regression-target suite and emit a JSON report");
  claims->add_option("--claim", claim_id, "run a single claim by id");
  claims->add_option("--report", report_path, "JSON report path");
  claims->add_option("--threads", threads, "worker threads");
  claims->add_option("--mc-drops", mc_drops, "Monte Carlo drops per claim");
  claims->add_option("--seed", seed, "master seed");
  bool list_claims = false;
  claims->add_flag("--list", list_claims, "list claim ids and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      udn::ConfigDiagnostics diag;
      udn::load_config_file(config_path, diag);
      if (!diag.ok()) {
        std::cerr << diag.joined();
        return 1;
      }
      std::cout << "config ok\n";
      return 0;
    }
    if (sweep->parsed())
      return run_sweep_command(config_path, out_dir, threads, mc_drops, seed,
                               false, false, false);
    if (mc->parsed())
      return run_sweep_command(config_path, out_dir, threads, mc_drops, seed,
                               true, false, false);
    if (power->parsed())
      return run_sweep_command(config_path, out_dir, threads, mc_drops, seed,
                               false, true, false);
    if (energy->parsed())
      return run_sweep_command(config_path, out_dir, threads, mc_drops, seed,
                               false, true, true);
    if (fit->parsed()) {
      std::ifstream in(csv_in, std::ios::binary);
      if (!in) {
        std::cerr << "cannot open " << csv_in << "\n";
        return 1;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      const auto rows = udn::csv_to_rows(ss.str());
      udn::ExperimentConfig cfg;
      if (!config_path.empty()) {
        udn::ConfigDiagnostics diag;
        cfg = udn::load_config_file(config_path, diag);
        if (!diag.ok()) {
          std::cerr << diag.joined();
          return 1;
        }
      } else {
        cfg.energy_enabled = true;  // report optima with default constants
      }
      const std::string report = udn::fit_report(rows, cfg);
      std::cout << report;
      if (!out_dir.empty())
        return write_file(fs::path(out_dir) / "fit_report.txt", report);
      return 0;
    }
    if (claims->parsed()) {
      if (list_claims) {
        for (const auto& id : udn::claim_ids()) std::cout << id << "\n";
        return 0;
      }
      udn::ClaimOptions opts;
      if (mc_drops > 0) opts.mc_drops = mc_drops;
      if (seed != 0) opts.seed = seed;
      opts.threads = threads;
      std::vector<udn::ClaimResult> results;
      if (!claim_id.empty())
        results.push_back(udn::run_claim(claim_id, opts));
      else
        results = udn::run_all_claims(opts);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " — "
                  << r.detail << "\n";
        all_pass = all_pass && r.pass;
      }
      if (!report_path.empty())
        write_file(report_path, udn::claims_json_report(results));
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
