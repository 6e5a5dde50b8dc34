#include "fogcell/delay.hpp"

#include <cmath>
#include <stdexcept>

namespace fogcell {

DelayResult expected_delay(double l_a_m, double rho, const LinkParams& link,
                           const DelayParams& dp, HopMode mode) {
  if (l_a_m <= 0.0 || rho <= 0.0) {
    throw std::invalid_argument("distance and density must be positive");
  }
  if (dp.t_slot_s <= 0.0 || dp.t_retran_s <= 0.0) {
    throw std::invalid_argument("slot and retransmission times must be positive");
  }
  const HopChain chain = build_hop_chain(l_a_m, rho, mode);
  DelayResult result;
  result.k = chain.k;
  result.per_hop_p.reserve(chain.hop_lengths_m.size());
  double delay = static_cast<double>(chain.k - 1) * dp.t_retran_s;
  bool reachable = true;
  for (double hop_m : chain.hop_lengths_m) {
    const double p = p_hop_analytic(hop_m, link);
    result.per_hop_p.push_back(p);
    if (p <= 0.0) {
      reachable = false;
    } else {
      delay += dp.t_slot_s / p;
    }
  }
  result.reachable = reachable;
  result.delay_s = reachable ? delay : 0.0;
  return result;
}

SweepCurve sweep_density(double l_a_m, const std::vector<double>& rho_grid,
                         const LinkParams& link, const DelayParams& dp,
                         HopMode mode) {
  if (rho_grid.empty()) {
    throw std::invalid_argument("density grid must be non-empty");
  }
  for (std::size_t i = 1; i < rho_grid.size(); ++i) {
    if (rho_grid[i] <= rho_grid[i - 1]) {
      throw std::invalid_argument("density grid must be strictly increasing");
    }
  }
  SweepCurve curve;
  curve.l_a_m = l_a_m;
  curve.points.reserve(rho_grid.size());
  for (double rho : rho_grid) {
    const DelayResult r = expected_delay(l_a_m, rho, link, dp, mode);
    curve.points.push_back(
        {rho, r.delay_s, r.k, r.per_hop_p.front(), r.reachable});
  }
  return curve;
}

TurningPoint find_turning_point(const SweepCurve& curve) {
  const SweepPoint* best = nullptr;
  for (const SweepPoint& p : curve.points) {
    if (p.reachable && (best == nullptr || p.delay_s < best->delay_s)) {
      best = &p;
    }
  }
  if (best == nullptr) {
    throw std::runtime_error("no reachable point on the sweep curve");
  }
  return {best->rho, best->delay_s};
}

CalibrationResult calibrate(const std::vector<CalibrationTarget>& targets,
                            const CalibrationGrid& grid, const DelayParams& dp,
                            const std::vector<double>& rho_grid,
                            const LinkParams& base, HopMode mode) {
  if (targets.empty()) {
    throw std::invalid_argument("calibration needs at least one target");
  }
  CalibrationResult best;
  bool have_best = false;
  const int n_offset = static_cast<int>(
      std::floor((grid.offset_max_db - grid.offset_min_db) / grid.offset_step_db + 1e-9)) + 1;
  const int n_sigma = static_cast<int>(
      std::floor((grid.sigma_max_db - grid.sigma_min_db) / grid.sigma_step_db + 1e-9)) + 1;
  for (int io = 0; io < n_offset; ++io) {
    const double offset = grid.offset_min_db + io * grid.offset_step_db;
    for (int is = 0; is < n_sigma; ++is) {
      const double sigma = grid.sigma_min_db + is * grid.sigma_step_db;
      LinkParams link = base;
      // P_hop depends on (p_tx, theta) only through their difference.
      link.p_tx_dbm = offset;
      link.theta_db = 0.0;
      link.sigma_db = sigma;
      CalibrationResult cand;
      cand.offset_db = offset;
      cand.sigma_db = sigma;
      bool feasible = true;
      for (const CalibrationTarget& target : targets) {
        const SweepCurve curve =
            sweep_density(target.l_a_m, rho_grid, link, dp, mode);
        TurningPoint tp;
        try {
          tp = find_turning_point(curve);
        } catch (const std::runtime_error&) {
          feasible = false;
          break;
        }
        const double rel =
            std::abs(tp.delay_s - target.delay_min_s) / target.delay_min_s;
        cand.rel_residuals.push_back(rel);
        cand.turning_points.push_back(tp);
        cand.max_rel_residual = std::max(cand.max_rel_residual, rel);
      }
      if (feasible &&
          (!have_best || cand.max_rel_residual < best.max_rel_residual)) {
        best = cand;
        have_best = true;
      }
    }
  }
  if (!have_best) {
    throw std::runtime_error("no feasible point on the calibration grid");
  }
  return best;
}

}  // namespace fogcell
