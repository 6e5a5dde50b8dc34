// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// anything fails. Criteria cover the delay-curve shape and calibration, the
// exact delay formula, the link-model Monte-Carlo oracle, the throughput
// comparison, pathwise allocation dominance, the fog-cell handover benefit,
// and end-to-end determinism of the CLI commands.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fogcell/config.hpp"
#include "fogcell/delay.hpp"
#include "fogcell/reports.hpp"
#include "fogcell/rng.hpp"
#include "fogcell/sim.hpp"

using namespace fogcell;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool ok, const std::string& note) {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name,
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) {
    ++g_failures;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<double> make_grid(double lo, double hi, double step) {
  std::vector<double> g;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < n; ++i) {
    g.push_back(lo + i * step);
  }
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Criterion 2 drives the full grid fit; criterion 1 reuses its result.
CalibrationResult run_full_calibration(double* elapsed_s) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CalibrationTarget> targets = {
      {300.0, 0.32e-3}, {400.0, 0.46e-3}, {500.0, 0.63e-3}};
  const CalibrationResult best =
      calibrate(targets, CalibrationGrid{}, DelayParams{},
                make_grid(0.03, 0.20, 0.005), LinkParams{},
                HopMode::kHomogeneous);
  *elapsed_s = seconds_since(t0);
  return best;
}

void criterion_1_shape(const CalibrationResult& fit) {
  LinkParams link;
  link.p_tx_dbm = fit.offset_db;
  link.theta_db = 0.0;
  link.sigma_db = fit.sigma_db;
  const std::vector<double> rhos = make_grid(0.03, 0.20, 0.005);
  const auto t0 = std::chrono::steady_clock::now();
  bool interior = true;
  bool increasing = true;
  double prev_min = 0.0;
  std::ostringstream note;
  for (double la : {300.0, 400.0, 500.0}) {
    const SweepCurve curve =
        sweep_density(la, rhos, link, DelayParams{}, HopMode::kHomogeneous);
    const TurningPoint tp = find_turning_point(curve);
    if (tp.rho <= rhos.front() + 1e-12 || tp.rho >= rhos.back() - 1e-12) {
      interior = false;
    }
    if (tp.delay_s <= prev_min) {
      increasing = false;
    }
    prev_min = tp.delay_s;
    note << "la=" << la << " rho*=" << tp.rho
         << " min=" << tp.delay_s * 1e3 << "ms ";
  }
  const double dt = seconds_since(t0);
  note << "(" << dt << "s)";
  report(1, "delay curves have interior minima increasing in distance",
         interior && increasing && dt < 1.0, note.str());
}

void criterion_2_calibration(const CalibrationResult& fit, double elapsed_s) {
  std::ostringstream note;
  note << "offset=" << fit.offset_db << "dB sigma=" << fit.sigma_db
       << "dB max_rel_residual=" << fit.max_rel_residual
       << " turning points (found vs reference 0.08/0.09/0.105):";
  for (const TurningPoint& tp : fit.turning_points) {
    note << ' ' << tp.rho;
  }
  note << " (" << elapsed_s << "s)";
  report(2, "calibration reaches max relative residual <= 20%",
         fit.max_rel_residual <= 0.20 && elapsed_s < 30.0, note.str());
}

void criterion_3_exact_formula() {
  LinkParams link;
  link.sigma_db = 0.0;
  link.p_tx_dbm = 500.0;  // every in-range hop succeeds with certainty
  const DelayParams dp;
  Rng rng(2024);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    const double la = rng.next_uniform(30.0, 800.0);
    const double rho = rng.next_uniform(0.021, 0.6);
    const DelayResult r =
        expected_delay(la, rho, link, dp, HopMode::kHomogeneous);
    const double expected = r.k * dp.t_slot_s + (r.k - 1) * dp.t_retran_s;
    if (!r.reachable || std::abs(r.delay_s - expected) > 1e-12 * expected) {
      ok = false;
    }
  }
  report(3, "P_hop=1 delay equals k*t_slot + (k-1)*t_retran exactly", ok, "");
}

void criterion_4_link_oracle() {
  const LinkParams link;
  const std::uint64_t trials = 100000;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0.0;
  for (double d = 5.0; d <= 50.0; d += 5.0) {
    const double exact = p_hop_analytic(d, link);
    const MonteCarloEstimate mc = p_hop_monte_carlo(d, link, trials, 31337);
    const double err = std::abs(mc.estimate - exact);
    worst = std::max(worst, err);
    if (err > 0.01) {
      ok = false;
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream note;
  note << "worst |MC-analytic|=" << worst << " (" << dt << "s)";
  report(4, "analytic vs 1e5-trial Monte-Carlo P_hop within 0.01",
         ok && dt < 5.0, note.str());
}

void criterion_5_throughput() {
  const CellCapacity cap;
  const std::uint64_t trials = 100000;
  const auto t0 = std::chrono::steady_clock::now();
  const double tra10 =
      mean_throughput(Scheme::kTraditional, 10, cap, trials, 5).mean_mbps;
  const double ada10 =
      mean_throughput(Scheme::kAdaptive, 10, cap, trials, 5).mean_mbps;
  const double ada50 =
      mean_throughput(Scheme::kAdaptive, 50, cap, trials, 5).mean_mbps;
  const double tra30 =
      mean_throughput(Scheme::kTraditional, 30, cap, trials, 5).mean_mbps;
  const double tra50 =
      mean_throughput(Scheme::kTraditional, 50, cap, trials, 5).mean_mbps;
  const double dt = seconds_since(t0);
  const bool ok = std::abs(tra10 - 247.5) <= 0.02 * 247.5 &&
                  std::abs(ada10 - 330.0) <= 0.02 * 330.0 &&
                  std::abs(ada50 - 1000.0) <= 0.01 * 1000.0 &&
                  std::abs(tra50 - tra30) < 0.005 * tra30 && dt < 10.0;
  std::ostringstream note;
  note << "tra10=" << tra10 << " ada10=" << ada10 << " ada50=" << ada50
       << " tra30=" << tra30 << " tra50=" << tra50 << " (" << dt << "s)";
  report(5, "throughput means match the Fig. 5 anchors", ok, note.str());
}

void criterion_6_dominance() {
  const CellCapacity cap;
  bool ok = true;
  for (int n = 1; n <= 50 && ok; ++n) {
    for (std::uint64_t s = 0; s < 10000; ++s) {
      const std::uint64_t seed =
          Rng::stream(99, "dominance", s * 64 + static_cast<std::uint64_t>(n))
              .next_u64();
      const DemandProfile p = sample_demands(n, cap, seed);
      if (allocate_adaptive(p, cap).throughput_mbps <
          allocate_traditional(p, cap).throughput_mbps - 1e-9) {
        ok = false;
        break;
      }
    }
  }
  report(6, "adaptive >= traditional throughput on every profile", ok, "");
}

void criterion_7_handover() {
  ExperimentConfig cfg;
  cfg.set("duration_s", "2500");  // >= 100 traversals at one arrival/second
  const FogsimOutput a = run_fogsim(cfg);
  const FogsimOutput b = run_fogsim(cfg);

  const SimResult sim = run(cfg.fogcell(), cfg.link(), cfg.capacity());
  int live_gateways = 0;
  bool single_gateway = true;
  for (const SimEvent& e : sim.events) {
    if (e.event == "GATEWAY_ELECT") {
      ++live_gateways;
    } else if (e.event == "GATEWAY_DEPART") {
      --live_gateways;
    }
    if (live_gateways < 0 || live_gateways > 1) {
      single_gateway = false;
    }
  }
  const bool benefit = sim.summary.gateway_handover_count <=
                       sim.summary.baseline_handover_count;
  const bool enough = sim.summary.baseline_handover_count >= 100;
  const bool identical =
      a.events_csv == b.events_csv && a.summary_text == b.summary_text;
  std::ostringstream note;
  note << "gateway=" << sim.summary.gateway_handover_count
       << " baseline=" << sim.summary.baseline_handover_count;
  report(7, "fog-cell handover benefit with a single deterministic gateway",
         benefit && enough && single_gateway && identical, note.str());
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FOGCELL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

void criterion_8_determinism() {
  bool ok = true;
  const std::string common = "--seed 77 --trials 2000 --n-max 8 ";
  struct Case {
    std::string name;
    std::string args_template;               // {} replaced by run tag
    std::vector<std::string> file_templates; // outputs to compare
  };
  const std::vector<Case> cases = {
      {"delay-sweep", common + "--out acc_ds_{}.csv", {"acc_ds_{}.csv"}},
      {"throughput", common + "--out acc_tp_{}.csv", {"acc_tp_{}.csv"}},
      {"fogsim",
       common + "--out acc_ev_{}.csv --summary acc_sum_{}.txt",
       {"acc_ev_{}.csv", "acc_sum_{}.txt"}},
      {"calibrate",
       common + "--out acc_cal_{}.txt --fragment acc_frag_{}.cfg",
       {"acc_cal_{}.txt", "acc_frag_{}.cfg"}},
  };
  auto fill = [](std::string s, const char* tag) {
    std::size_t pos;
    while ((pos = s.find("{}")) != std::string::npos) {
      s.replace(pos, 2, tag);
    }
    return s;
  };
  for (const Case& c : cases) {
    for (const char* tag : {"a", "b"}) {
      if (run_cli(c.name + " " + fill(c.args_template, tag)) != 0) {
        ok = false;
      }
    }
    for (const std::string& ft : c.file_templates) {
      const std::string content_a = slurp(fill(ft, "a"));
      if (content_a.empty() || content_a != slurp(fill(ft, "b"))) {
        ok = false;
      }
      std::remove(fill(ft, "a").c_str());
      std::remove(fill(ft, "b").c_str());
    }
  }
  report(8, "every CLI command is byte-identical across same-seed reruns", ok,
         "");
}

}  // namespace

int main() {
  double calib_elapsed = 0.0;
  const CalibrationResult fit = run_full_calibration(&calib_elapsed);
  criterion_1_shape(fit);
  criterion_2_calibration(fit, calib_elapsed);
  criterion_3_exact_formula();
  criterion_4_link_oracle();
  criterion_5_throughput();
  criterion_6_dominance();
  criterion_7_handover();
  criterion_8_determinism();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
