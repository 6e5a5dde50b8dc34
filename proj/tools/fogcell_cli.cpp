// fogcell command-line front end. Thin argv layer over the C API in
// fogcell.h; all model work lives in the shared library.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fogcell.h"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string seed;
  std::string out_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

void add_override_flag(CLI::App* cmd, CommonOpts& opts, const std::string& flag,
                       const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag,
      [&opts, key](const std::string& v) { opts.overrides.emplace_back(key, v); },
      help);
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "key=value config file ('#' comments allowed)");
  cmd->add_option("--seed", opts.seed, "master 64-bit seed");
  add_override_flag(cmd, opts, "--t-slot-us", "t_slot_us",
                    "slot duration (microseconds)");
  add_override_flag(cmd, opts, "--rho-min", "rho_min",
                    "density sweep start (vehicles/m)");
  add_override_flag(cmd, opts, "--rho-max", "rho_max",
                    "density sweep end (vehicles/m)");
  add_override_flag(cmd, opts, "--rho-step", "rho_step",
                    "density sweep step (vehicles/m)");
  add_override_flag(cmd, opts, "--la", "la_list",
                    "RSU-to-source distances, comma separated (m)");
  add_override_flag(cmd, opts, "--n-max", "n_max",
                    "largest vehicle count in the throughput sweep");
  add_override_flag(cmd, opts, "--trials", "trials", "Monte-Carlo trials");
  add_override_flag(cmd, opts, "--p-tx-dbm", "p_tx_dbm",
                    "transmit power (dBm)");
  add_override_flag(cmd, opts, "--theta-db", "theta_db",
                    "receiver SNR threshold (dB)");
  add_override_flag(cmd, opts, "--sigma-db", "sigma_db",
                    "shadowing standard deviation (dB)");
}

// Precedence: flags > config file > built-in defaults.
int apply_config(fc_config* cfg, const CommonOpts& opts) {
  if (!opts.config_path.empty() &&
      fc_config_load_file(cfg, opts.config_path.c_str()) != FC_OK) {
    std::fprintf(stderr, "error: %s\n", fc_last_error());
    return 1;
  }
  for (const auto& [key, value] : opts.overrides) {
    if (fc_config_set(cfg, key.c_str(), value.c_str()) != FC_OK) {
      std::fprintf(stderr, "error: %s\n", fc_last_error());
      return 1;
    }
  }
  if (!opts.seed.empty() &&
      fc_config_set(cfg, "seed", opts.seed.c_str()) != FC_OK) {
    std::fprintf(stderr, "error: %s\n", fc_last_error());
    return 1;
  }
  return 0;
}

int status_to_exit(fc_status rc) {
  if (rc == FC_OK) {
    return 0;
  }
  std::fprintf(stderr, "error: %s\n", fc_last_error());
  return rc == FC_ERR_INVALID_ARGUMENT ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fog-cell vehicular network experiments: mmWave multi-hop delay, "
      "bandwidth allocation throughput, and gateway mobility simulation.\n"
      "Units: slot times in microseconds (--t-slot-us), delay CSV in ms, "
      "throughput CSV in Mbps, vehicle density in vehicles/m."};
  app.require_subcommand(1);

  CommonOpts delay_opts, tp_opts, sim_opts, cal_opts;
  std::string sim_summary_path = "fogsim_summary.txt";
  std::string cal_fragment_path = "calibrated.cfg";

  CLI::App* delay = app.add_subcommand(
      "delay-sweep", "transmission delay vs vehicle density (CSV)");
  add_common(delay, delay_opts);
  delay->add_option("--out", delay_opts.out_path, "output CSV path")
      ->required();

  CLI::App* throughput = app.add_subcommand(
      "throughput", "traditional vs adaptive allocation throughput (CSV)");
  add_common(throughput, tp_opts);
  throughput->add_option("--out", tp_opts.out_path, "output CSV path")
      ->required();

  CLI::App* fogsim = app.add_subcommand(
      "fogsim", "time-stepped fog-cell mobility run (event log + summary)");
  add_common(fogsim, sim_opts);
  fogsim->add_option("--out", sim_opts.out_path, "event log CSV path")
      ->required();
  fogsim->add_option("--summary", sim_summary_path,
                     "summary key=value file path");

  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "fit (p_tx - theta, sigma) to target delay minima");
  add_common(calibrate, cal_opts);
  calibrate->add_option("--out", cal_opts.out_path, "report file path")
      ->required();
  calibrate->add_option("--fragment", cal_fragment_path,
                        "config fragment output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::unique_ptr<fc_config, decltype(&fc_config_free)> cfg(fc_config_new(),
                                                            &fc_config_free);
  if (!cfg) {
    std::fprintf(stderr, "error: out of memory\n");
    return 1;
  }

  if (delay->parsed()) {
    if (int rc = apply_config(cfg.get(), delay_opts)) return rc;
    return status_to_exit(
        fc_run_delay_sweep(cfg.get(), delay_opts.out_path.c_str()));
  }
  if (throughput->parsed()) {
    if (int rc = apply_config(cfg.get(), tp_opts)) return rc;
    return status_to_exit(
        fc_run_throughput(cfg.get(), tp_opts.out_path.c_str()));
  }
  if (fogsim->parsed()) {
    if (int rc = apply_config(cfg.get(), sim_opts)) return rc;
    return status_to_exit(fc_run_fogsim(cfg.get(), sim_opts.out_path.c_str(),
                                        sim_summary_path.c_str()));
  }
  if (calibrate->parsed()) {
    if (int rc = apply_config(cfg.get(), cal_opts)) return rc;
    return status_to_exit(fc_run_calibrate(
        cfg.get(), cal_opts.out_path.c_str(), cal_fragment_path.c_str()));
  }
  return 1;
}
