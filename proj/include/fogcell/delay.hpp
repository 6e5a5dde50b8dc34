#pragma once

#include <vector>

#include "fogcell/link.hpp"
#include "fogcell/topology.hpp"

namespace fogcell {

struct DelayParams {
  double t_slot_s = 5e-6;
  double t_retran_s = 5e-6;
};

struct DelayResult {
  int k = 0;
  std::vector<double> per_hop_p;
  double delay_s = 0.0;  // meaningful only when reachable
  bool reachable = false;
};

struct SweepPoint {
  double rho = 0.0;
  double delay_s = 0.0;
  int k = 0;
  double p_hop = 0.0;  // first-hop success probability
  bool reachable = false;
};

struct SweepCurve {
  double l_a_m = 0.0;
  std::vector<SweepPoint> points;  // rho strictly increasing
};

struct TurningPoint {
  double rho = 0.0;
  double delay_s = 0.0;
};

struct CalibrationTarget {
  double l_a_m = 0.0;
  double delay_min_s = 0.0;
};

struct CalibrationGrid {
  double offset_min_db = 5.0;  // p_tx - theta
  double offset_max_db = 25.0;
  double offset_step_db = 0.5;
  double sigma_min_db = 2.0;
  double sigma_max_db = 10.0;
  double sigma_step_db = 0.5;
};

struct CalibrationResult {
  double offset_db = 0.0;  // best p_tx - theta
  double sigma_db = 0.0;
  double max_rel_residual = 0.0;
  std::vector<double> rel_residuals;        // per target
  std::vector<TurningPoint> turning_points; // per target, at the best fit
};

// End-to-end expected delay: T = sum_i t_slot / P_hop(delta_i) + (k-1)*t_retran.
// Unreachable when any hop's P_hop is zero.
DelayResult expected_delay(double l_a_m, double rho, const LinkParams& link,
                           const DelayParams& dp, HopMode mode);

// One expected_delay per grid point, order preserved.
SweepCurve sweep_density(double l_a_m, const std::vector<double>& rho_grid,
                         const LinkParams& link, const DelayParams& dp,
                         HopMode mode);

// Minimum-delay grid point among reachable points, ties toward smaller rho.
// Throws if no point is reachable.
TurningPoint find_turning_point(const SweepCurve& curve);

// Exhaustive grid fit of (p_tx - theta, sigma) minimizing the maximum
// relative error of the per-target curve minima. Deterministic: offsets
// outer, sigmas inner, first best wins.
CalibrationResult calibrate(const std::vector<CalibrationTarget>& targets,
                            const CalibrationGrid& grid, const DelayParams& dp,
                            const std::vector<double>& rho_grid,
                            const LinkParams& base, HopMode mode);

}  // namespace fogcell
