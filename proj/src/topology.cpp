#include "fogcell/topology.hpp"

#include <cmath>
#include <stdexcept>

#include "fogcell/rng.hpp"

namespace fogcell {

namespace {

// ceil with a relative guard so grid products like 300 * 0.08 that land a
// hair above an integer in binary still count as that integer.
int guarded_ceil(double x) {
  const double eps = 1e-9 * std::max(1.0, std::abs(x));
  return static_cast<int>(std::ceil(x - eps));
}

}  // namespace

std::vector<double> place_vehicles(const RoadTopology& topology) {
  if (topology.length_m <= 0.0 || topology.density_veh_per_m <= 0.0) {
    throw std::invalid_argument("road length and density must be positive");
  }
  std::vector<double> positions;
  if (topology.placement == Placement::kEquidistant) {
    const double spacing = 1.0 / topology.density_veh_per_m;
    const int count = static_cast<int>(
        std::floor(topology.length_m * topology.density_veh_per_m + 1e-9));
    positions.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
      positions.push_back(static_cast<double>(i) * spacing);
    }
  } else {
    Rng rng = Rng::stream(topology.seed, "place_poisson", 0);
    double x = 0.0;
    for (;;) {
      x += rng.next_exponential(topology.density_veh_per_m);
      if (x > topology.length_m) {
        break;
      }
      positions.push_back(x);
    }
  }
  return positions;
}

HopChain build_hop_chain(double l_a_m, double density_veh_per_m, HopMode mode) {
  if (l_a_m <= 0.0 || density_veh_per_m <= 0.0) {
    throw std::invalid_argument("hop chain inputs must be positive");
  }
  const double spacing = 1.0 / density_veh_per_m;
  const int k = std::max(1, guarded_ceil(l_a_m * density_veh_per_m));
  HopChain chain;
  chain.k = k;
  chain.hop_lengths_m.assign(static_cast<std::size_t>(k), spacing);
  if (mode == HopMode::kResidual) {
    const double residual = l_a_m - static_cast<double>(k - 1) * spacing;
    chain.hop_lengths_m.back() = residual;
  }
  return chain;
}

}  // namespace fogcell
