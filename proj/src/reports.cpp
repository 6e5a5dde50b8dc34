#include "fogcell/reports.hpp"

#include <cstdio>
#include <sstream>

#include "fogcell/delay.hpp"
#include "fogcell/sim.hpp"

namespace fogcell {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

// 6 significant digits for all floating CSV values
std::string g6(double v) { return fmt("%.6g", v); }

std::string header(const ExperimentConfig& config) {
  return "# " + tool_version() + "\n" + config.header_comment();
}

}  // namespace

std::string tool_version() { return "fogcell 1.0.0"; }

std::string run_delay_sweep_csv(const ExperimentConfig& config) {
  const LinkParams link = config.link();
  const DelayParams dp = config.delay_params();
  const HopMode mode = config.hop_mode();
  const std::vector<double> rhos = config.rho_grid();

  std::ostringstream out;
  out << header(config);
  out << "la_m,rho_veh_per_m,k,p_hop,delay_ms,reachable\n";
  for (double la : config.la_list()) {
    const SweepCurve curve = sweep_density(la, rhos, link, dp, mode);
    bool any_reachable = false;
    for (const SweepPoint& p : curve.points) {
      out << g6(la) << ',' << g6(p.rho) << ',' << p.k << ',' << g6(p.p_hop)
          << ',' << (p.reachable ? g6(p.delay_s * 1e3) : "nan") << ','
          << (p.reachable ? "true" : "false") << '\n';
      any_reachable = any_reachable || p.reachable;
    }
    if (any_reachable) {
      const TurningPoint tp = find_turning_point(curve);
      const DelayResult r = expected_delay(la, tp.rho, link, dp, mode);
      out << g6(la) << ',' << g6(tp.rho) << ',' << r.k << ','
          << g6(r.per_hop_p.front()) << ',' << g6(tp.delay_s * 1e3)
          << ",turning_point\n";
    }
  }
  return out.str();
}

std::string run_throughput_csv(const ExperimentConfig& config) {
  const CellCapacity capacity = config.capacity();
  const std::uint64_t trials = config.trials();
  const std::uint64_t seed = config.seed();

  std::ostringstream out;
  out << header(config);
  out << "n,scheme,mean_throughput_mbps,ci95_mbps,trials,seed\n";
  for (int n = 1; n <= config.n_max(); ++n) {
    for (Scheme scheme : {Scheme::kTraditional, Scheme::kAdaptive}) {
      const ThroughputEstimate est =
          mean_throughput(scheme, n, capacity, trials, seed);
      out << n << ','
          << (scheme == Scheme::kTraditional ? "traditional" : "adaptive")
          << ',' << g6(est.mean_mbps) << ',' << g6(est.ci95_mbps) << ','
          << trials << ',' << seed << '\n';
    }
  }
  return out.str();
}

FogsimOutput run_fogsim(const ExperimentConfig& config) {
  const SimResult result = run(config.fogcell(), config.link(),
                               config.capacity());

  std::ostringstream events;
  events << header(config);
  events << "t_s,event,vehicle_id,detail\n";
  for (const SimEvent& e : result.events) {
    events << fmt("%.6f", e.t_s) << ',' << e.event << ',' << e.vehicle_id
           << ',' << e.detail << '\n';
  }

  std::ostringstream summary;
  summary << header(config);
  summary << "gateway_handover_count="
          << result.summary.gateway_handover_count << '\n';
  summary << "baseline_handover_count="
          << result.summary.baseline_handover_count << '\n';
  summary << "disconnected_time_fraction="
          << g6(result.summary.disconnected_time_fraction) << '\n';
  summary << "mean_chain_hops=" << g6(result.summary.mean_chain_hops) << '\n';
  double tp_sum = 0.0;
  for (double tp : result.summary.epoch_throughputs_mbps) {
    tp_sum += tp;
  }
  const std::size_t epochs = result.summary.epoch_throughputs_mbps.size();
  summary << "epoch_count=" << epochs << '\n';
  summary << "mean_epoch_throughput_mbps="
          << (epochs > 0 ? g6(tp_sum / static_cast<double>(epochs)) : "nan")
          << '\n';
  return {events.str(), summary.str()};
}

CalibrateOutput run_calibrate(const ExperimentConfig& config) {
  const std::vector<CalibrationTarget> targets = config.calibration_targets();
  const CalibrationResult best =
      calibrate(targets, config.calibration_grid(), config.delay_params(),
                config.rho_grid(), config.link(), config.hop_mode());

  std::ostringstream report;
  report << header(config);
  report << "best_offset_db=" << g6(best.offset_db) << '\n';
  report << "best_sigma_db=" << g6(best.sigma_db) << '\n';
  report << "max_rel_residual=" << g6(best.max_rel_residual) << '\n';
  for (std::size_t i = 0; i < targets.size(); ++i) {
    report << "target_la_m=" << g6(targets[i].l_a_m)
           << " target_delay_ms=" << g6(targets[i].delay_min_s * 1e3)
           << " fitted_delay_ms=" << g6(best.turning_points[i].delay_s * 1e3)
           << " turning_point_rho=" << g6(best.turning_points[i].rho)
           << " rel_residual=" << g6(best.rel_residuals[i]) << '\n';
  }

  // Fragment feeds straight back into the config parser: the fit pins only
  // the difference p_tx - theta, so theta is written as zero.
  std::ostringstream fragment;
  fragment << "# calibrated link parameters (" << tool_version() << ")\n";
  fragment << "p_tx_dbm=" << g6(best.offset_db) << '\n';
  fragment << "theta_db=0\n";
  fragment << "sigma_db=" << g6(best.sigma_db) << '\n';
  return {report.str(), fragment.str()};
}

}  // namespace fogcell
