#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fogcell/bandwidth.hpp"
#include "fogcell/link.hpp"

namespace fogcell {

struct VehicleState {
  int id = 0;
  double x_m = 0.0;
  double v_mps = 0.0;
};

enum class ArrivalModel { kEquidistant, kPoisson };

struct FogCellConfig {
  double road_len_m = 2000.0;
  double rsu_x_m = 1000.0;
  double rsu_radius_m = 150.0;
  ArrivalModel arrival_model = ArrivalModel::kEquidistant;
  double arrival_rho = 0.05;  // veh/m; 0 means no arrivals
  double v_mps = 20.0;
  double dt_s = 0.1;
  double duration_s = 600.0;
  double ctrl_period_s = 1.0;
  std::uint64_t seed = 0;
};

struct SimEvent {
  double t_s = 0.0;
  std::string event;  // ARRIVE EXIT GATEWAY_ELECT GATEWAY_DEPART COVERAGE_ENTER EPOCH_ALLOC
  int vehicle_id = -1;
  std::string detail;
};

struct SimSummary {
  int gateway_handover_count = 0;
  int baseline_handover_count = 0;
  double disconnected_time_fraction = 0.0;
  double mean_chain_hops = 0.0;
  std::vector<double> epoch_throughputs_mbps;
};

struct SimResult {
  std::vector<SimEvent> events;
  SimSummary summary;
};

// Gateway election: in-coverage vehicle with the longest remaining dwell
// (smallest x; motion is +x), ties to the lowest id. -1 when coverage is empty.
int select_gateway(const std::vector<VehicleState>& vehicles,
                   const FogCellConfig& config);

// Time-stepped fog cell. Arrivals enter at x = 0 (equidistant spacing 1/rho
// or seeded Poisson), everyone moves at the common speed, vehicles leave at
// the road end. step() advances one dt tick; run() drives the whole
// duration and collects events plus summary metrics.
class FogCellSim {
 public:
  FogCellSim(const FogCellConfig& config, const LinkParams& link,
             const CellCapacity& capacity);

  // One tick: move vehicles, drop exits, admit due arrivals.
  void step();

  SimResult run();

  double now_s() const { return now_s_; }
  const std::vector<VehicleState>& vehicles() const { return vehicles_; }
  const std::vector<SimEvent>& events() const { return events_; }

 private:
  void schedule_next_arrival();
  bool in_coverage(const VehicleState& v) const;

  FogCellConfig config_;
  LinkParams link_;
  CellCapacity capacity_;
  std::vector<VehicleState> vehicles_;
  std::vector<SimEvent> events_;
  double now_s_ = 0.0;
  long tick_ = 0;
  double next_arrival_s_ = 0.0;
  int next_id_ = 0;
  std::uint64_t arrival_draws_ = 0;
};

SimResult run(const FogCellConfig& config, const LinkParams& link,
              const CellCapacity& capacity);

}  // namespace fogcell
