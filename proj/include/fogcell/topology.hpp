#pragma once

#include <cstdint>
#include <vector>

namespace fogcell {

enum class Placement { kEquidistant, kPoisson };

struct RoadTopology {
  double length_m = 1000.0;
  double density_veh_per_m = 0.08;
  Placement placement = Placement::kEquidistant;
  std::uint64_t seed = 0;  // used only for poisson placement
};

enum class HopMode { kHomogeneous, kResidual };

// Relay decomposition of the RSU-to-source distance into per-hop lengths.
struct HopChain {
  std::vector<double> hop_lengths_m;
  int k = 0;
};

// Vehicle positions along (0, L], ascending. Equidistant mode spaces
// vehicles exactly 1/rho apart; poisson mode draws a rate-rho process.
std::vector<double> place_vehicles(const RoadTopology& topology);

// k = ceil(l_a * rho) nearest-neighbor hops. Homogeneous: every hop is
// 1/rho (the single-hop-length closed form). Residual: last hop absorbs the
// remainder so lengths sum to l_a exactly.
HopChain build_hop_chain(double l_a_m, double density_veh_per_m, HopMode mode);

}  // namespace fogcell
