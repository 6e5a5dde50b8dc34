#include "fogcell/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fogcell/rng.hpp"

namespace fogcell {

DemandProfile sample_demands(int n, const CellCapacity& capacity,
                             std::uint64_t seed) {
  if (n < 0) {
    throw std::invalid_argument("vehicle count must be non-negative");
  }
  DemandProfile profile;
  profile.n = n;
  profile.seed = seed;
  profile.demands.reserve(static_cast<std::size_t>(n));
  Rng rng = Rng::stream(seed, "demand", 0);
  const double hi = 2.0 * capacity.b_ave();
  for (int i = 0; i < n; ++i) {
    profile.demands.push_back(rng.next_uniform(0.0, hi));
  }
  return profile;
}

AllocationOutcome allocate_traditional(const DemandProfile& profile,
                                       const CellCapacity& capacity) {
  AllocationOutcome out;
  const double b_ave = capacity.b_ave();
  const int max_served =
      static_cast<int>(std::floor(capacity.b_total / b_ave + 1e-12));
  const int served = std::min(profile.n, max_served);
  out.per_vehicle_alloc.assign(profile.demands.size(), 0.0);
  for (int i = 0; i < served; ++i) {
    out.per_vehicle_alloc[static_cast<std::size_t>(i)] =
        std::min(profile.demands[static_cast<std::size_t>(i)], b_ave);
  }
  out.total_alloc = std::accumulate(out.per_vehicle_alloc.begin(),
                                    out.per_vehicle_alloc.end(), 0.0);
  out.throughput_mbps = capacity.mbps_per_bandwidth() * out.total_alloc;
  return out;
}

AllocationOutcome allocate_adaptive(const DemandProfile& profile,
                                    const CellCapacity& capacity) {
  AllocationOutcome out;
  const double total_demand = std::accumulate(profile.demands.begin(),
                                              profile.demands.end(), 0.0);
  if (total_demand <= capacity.b_total) {
    out.per_vehicle_alloc = profile.demands;
    out.total_alloc = total_demand;
  } else {
    const double scale = capacity.b_total / total_demand;
    out.per_vehicle_alloc.reserve(profile.demands.size());
    for (double d : profile.demands) {
      out.per_vehicle_alloc.push_back(d * scale);
    }
    out.total_alloc = capacity.b_total;
  }
  out.throughput_mbps = capacity.mbps_per_bandwidth() * out.total_alloc;
  return out;
}

ThroughputEstimate mean_throughput(Scheme scheme, int n,
                                   const CellCapacity& capacity,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("trial count must be positive");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Derive a fresh profile seed per trial so trials are order-independent.
    const std::uint64_t trial_seed = Rng::stream(seed, "throughput", t).next_u64();
    const DemandProfile profile = sample_demands(n, capacity, trial_seed);
    const AllocationOutcome out = scheme == Scheme::kTraditional
                                      ? allocate_traditional(profile, capacity)
                                      : allocate_adaptive(profile, capacity);
    sum += out.throughput_mbps;
    sum_sq += out.throughput_mbps * out.throughput_mbps;
  }
  const double nt = static_cast<double>(trials);
  const double mean = sum / nt;
  const double var = std::max(0.0, sum_sq / nt - mean * mean);
  return {mean, 1.96 * std::sqrt(var / nt)};
}

}  // namespace fogcell
