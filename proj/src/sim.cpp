#include "fogcell/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

#include "fogcell/rng.hpp"

namespace fogcell {

namespace {

std::string format_mbps(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

int select_gateway(const std::vector<VehicleState>& vehicles,
                   const FogCellConfig& config) {
  int best = -1;
  double best_x = 0.0;
  for (const VehicleState& v : vehicles) {
    if (std::abs(v.x_m - config.rsu_x_m) > config.rsu_radius_m) {
      continue;
    }
    if (best < 0 || v.x_m < best_x || (v.x_m == best_x && v.id < best)) {
      best = v.id;
      best_x = v.x_m;
    }
  }
  return best;
}

FogCellSim::FogCellSim(const FogCellConfig& config, const LinkParams& link,
                       const CellCapacity& capacity)
    : config_(config), link_(link), capacity_(capacity) {
  if (config.dt_s <= 0.0 || config.v_mps <= 0.0 || config.road_len_m <= 0.0 ||
      config.rsu_radius_m <= 0.0 || config.duration_s < 0.0 ||
      config.ctrl_period_s < config.dt_s || config.arrival_rho < 0.0 ||
      config.rsu_x_m < 0.0 || config.rsu_x_m > config.road_len_m) {
    throw std::invalid_argument("malformed fog cell config");
  }
  next_arrival_s_ = std::numeric_limits<double>::infinity();
  if (config_.arrival_rho > 0.0) {
    next_arrival_s_ = 0.0;
    schedule_next_arrival();
  }
}

void FogCellSim::schedule_next_arrival() {
  if (config_.arrival_model == ArrivalModel::kEquidistant) {
    next_arrival_s_ += 1.0 / (config_.arrival_rho * config_.v_mps);
  } else {
    Rng rng = Rng::stream(config_.seed, "arrival", arrival_draws_++);
    next_arrival_s_ +=
        rng.next_exponential(config_.arrival_rho * config_.v_mps);
  }
}

bool FogCellSim::in_coverage(const VehicleState& v) const {
  return std::abs(v.x_m - config_.rsu_x_m) <= config_.rsu_radius_m;
}

void FogCellSim::step() {
  // tick * dt rather than accumulation, so epoch boundaries land exactly
  ++tick_;
  now_s_ = static_cast<double>(tick_) * config_.dt_s;
  for (VehicleState& v : vehicles_) {
    v.x_m += v.v_mps * config_.dt_s;
  }
  for (auto it = vehicles_.begin(); it != vehicles_.end();) {
    if (it->x_m > config_.road_len_m) {
      events_.push_back({now_s_, "EXIT", it->id, ""});
      it = vehicles_.erase(it);
    } else {
      ++it;
    }
  }
  while (next_arrival_s_ <= now_s_ + 1e-12) {
    vehicles_.push_back({next_id_, 0.0, config_.v_mps});
    events_.push_back({now_s_, "ARRIVE", next_id_, ""});
    ++next_id_;
    schedule_next_arrival();
  }
}

SimResult FogCellSim::run() {
  SimSummary summary;
  std::set<int> covered;        // ids currently inside RSU coverage
  int gateway_id = -1;
  long ticks = 0;
  long disconnected_ticks = 0;
  long chain_ticks = 0;
  double chain_hops_sum = 0.0;
  double next_epoch_s = config_.ctrl_period_s;
  std::uint64_t epoch_index = 0;
  const long total_ticks =
      static_cast<long>(std::floor(config_.duration_s / config_.dt_s + 1e-9));

  for (long tick = 0; tick < total_ticks; ++tick) {
    step();

    // Baseline comparator: each vehicle counts one handover per entry into
    // RSU coverage (monotone motion, so at most one entry per traversal).
    std::set<int> covered_now;
    for (const VehicleState& v : vehicles_) {
      if (in_coverage(v)) {
        covered_now.insert(v.id);
        if (covered.find(v.id) == covered.end()) {
          events_.push_back({now_s_, "COVERAGE_ENTER", v.id, ""});
          ++summary.baseline_handover_count;
        }
      }
    }
    covered.swap(covered_now);

    // Gateway maintenance: re-elect only when the incumbent left coverage
    // or the cell has no gateway yet.
    if (gateway_id >= 0 && covered.find(gateway_id) == covered.end()) {
      events_.push_back({now_s_, "GATEWAY_DEPART", gateway_id, ""});
      gateway_id = -1;
    }
    if (gateway_id < 0) {
      const int elected = select_gateway(vehicles_, config_);
      if (elected >= 0) {
        gateway_id = elected;
        events_.push_back({now_s_, "GATEWAY_ELECT", elected, ""});
        ++summary.gateway_handover_count;
      }
    }

    // Relay-chain connectivity: sorted by position, every V2V gap along the
    // chain must be within mmWave range and a gateway must exist.
    ++ticks;
    std::vector<double> xs;
    xs.reserve(vehicles_.size());
    double gateway_x = 0.0;
    for (const VehicleState& v : vehicles_) {
      xs.push_back(v.x_m);
      if (v.id == gateway_id) {
        gateway_x = v.x_m;
      }
    }
    std::sort(xs.begin(), xs.end());
    bool connected = gateway_id >= 0;
    for (std::size_t i = 1; i + 0 < xs.size() && connected; ++i) {
      if (xs[i] - xs[i - 1] > link_.range_max_m) {
        connected = false;
      }
    }
    if (!connected) {
      ++disconnected_ticks;
    }
    if (gateway_id >= 0 && !xs.empty()) {
      const auto g = std::lower_bound(xs.begin(), xs.end(), gateway_x);
      const long gi = g - xs.begin();
      const long hops = std::max(gi, static_cast<long>(xs.size()) - 1 - gi);
      chain_hops_sum += static_cast<double>(hops);
      ++chain_ticks;
    }

    // RSUC control epoch: adaptive allocation over current members with
    // demands re-sampled per epoch.
    if (now_s_ + 1e-12 >= next_epoch_s) {
      const std::uint64_t epoch_seed =
          Rng::stream(config_.seed, "epoch", epoch_index).next_u64();
      const DemandProfile profile = sample_demands(
          static_cast<int>(vehicles_.size()), capacity_, epoch_seed);
      const AllocationOutcome out = allocate_adaptive(profile, capacity_);
      summary.epoch_throughputs_mbps.push_back(out.throughput_mbps);
      events_.push_back({now_s_, "EPOCH_ALLOC", -1,
                         format_mbps(out.throughput_mbps)});
      ++epoch_index;
      next_epoch_s += config_.ctrl_period_s;
    }
  }

  summary.disconnected_time_fraction =
      ticks > 0 ? static_cast<double>(disconnected_ticks) /
                      static_cast<double>(ticks)
                : 1.0;
  summary.mean_chain_hops =
      chain_ticks > 0 ? chain_hops_sum / static_cast<double>(chain_ticks) : 0.0;
  return {std::move(events_), summary};
}

SimResult run(const FogCellConfig& config, const LinkParams& link,
              const CellCapacity& capacity) {
  FogCellSim sim(config, link, capacity);
  return sim.run();
}

}  // namespace fogcell
