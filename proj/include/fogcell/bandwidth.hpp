#pragma once

#include <cstdint>
#include <vector>

namespace fogcell {

// Cell bandwidth/throughput budget. Bandwidth is an abstract unit (b_total
// defaults to 1); all reporting is in throughput, which is proportional to
// allocated bandwidth.
struct CellCapacity {
  double b_total = 1.0;
  double c_total_mbps = 1000.0;
  double c_ave_mbps = 33.0;

  double b_ave() const { return b_total * c_ave_mbps / c_total_mbps; }
  double mbps_per_bandwidth() const { return c_total_mbps / b_total; }
};

struct DemandProfile {
  int n = 0;
  std::vector<double> demands;  // each in [0, 2*b_ave]
  std::uint64_t seed = 0;
};

struct AllocationOutcome {
  std::vector<double> per_vehicle_alloc;
  double total_alloc = 0.0;
  double throughput_mbps = 0.0;
};

enum class Scheme { kTraditional, kAdaptive };

struct ThroughputEstimate {
  double mean_mbps = 0.0;
  double ci95_mbps = 0.0;
};

// n i.i.d. uniform draws on [0, 2*B_ave], stream derived from the seed.
DemandProfile sample_demands(int n, const CellCapacity& capacity,
                             std::uint64_t seed);

// Average allocation: the first floor(B / B_ave) vehicles are served, each
// capped at B_ave; the rest get nothing.
AllocationOutcome allocate_traditional(const DemandProfile& profile,
                                       const CellCapacity& capacity);

// Pooled allocation: everyone gets their demand when it fits, otherwise
// demands are scaled proportionally so the total is exactly B.
AllocationOutcome allocate_adaptive(const DemandProfile& profile,
                                    const CellCapacity& capacity);

// Monte-Carlo mean throughput over seeded demand profiles; trial t draws
// from the (seed, t) substream.
ThroughputEstimate mean_throughput(Scheme scheme, int n,
                                   const CellCapacity& capacity,
                                   std::uint64_t trials, std::uint64_t seed);

}  // namespace fogcell
