#include "fogcell/link.hpp"

#include <cmath>
#include <stdexcept>

#include "fogcell/rng.hpp"

namespace fogcell {

double noise_floor_dbm(const LinkParams& params) {
  if (params.w_hz <= 0.0) {
    throw std::invalid_argument("link bandwidth w_hz must be positive");
  }
  return params.n0_dbm_per_hz + 10.0 * std::log10(params.w_hz);
}

double path_loss_mean_db(double delta_m) {
  if (delta_m <= 0.0) {
    throw std::invalid_argument("path loss distance must be positive");
  }
  return 69.6 + 20.9 * std::log10(delta_m);
}

double link_margin_db(double delta_m, const LinkParams& params) {
  return params.p_tx_dbm - params.theta_db - noise_floor_dbm(params) -
         path_loss_mean_db(delta_m);
}

double p_hop_analytic(double delta_m, const LinkParams& params) {
  if (delta_m <= 0.0) {
    throw std::invalid_argument("hop distance must be positive");
  }
  if (params.range_max_m <= 0.0) {
    throw std::invalid_argument("range_max_m must be positive");
  }
  if (delta_m > params.range_max_m) {
    return 0.0;
  }
  const double margin = link_margin_db(delta_m, params);
  if (params.sigma_db == 0.0) {
    return margin >= 0.0 ? 1.0 : 0.0;
  }
  // Standard normal CDF via erfc; absolute error well below 1e-12.
  return 0.5 * std::erfc(-margin / (params.sigma_db * std::sqrt(2.0)));
}

MonteCarloEstimate p_hop_monte_carlo(double delta_m, const LinkParams& params,
                                     std::uint64_t trials,
                                     std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("monte carlo trial count must be positive");
  }
  if (delta_m <= 0.0) {
    throw std::invalid_argument("hop distance must be positive");
  }
  if (delta_m > params.range_max_m) {
    return {0.0, 0.0};
  }
  const double margin = link_margin_db(delta_m, params);
  if (params.sigma_db == 0.0) {
    return {margin >= 0.0 ? 1.0 : 0.0, 0.0};
  }
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, "p_hop", t);
    const double xi = params.sigma_db * rng.next_normal();
    if (xi <= margin) {
      ++successes;
    }
  }
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  const double hw = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return {p, hw};
}

}  // namespace fogcell
