#pragma once

#include <cstdint>

namespace fogcell {

// 60 GHz V2V link budget parameters. Immutable value type.
struct LinkParams {
  double p_tx_dbm = 30.0;        // transmit power
  double theta_db = 10.0;        // receiver SNR threshold
  double sigma_db = 5.8;         // log-normal shadowing std dev
  double n0_dbm_per_hz = -174.0; // noise power spectral density
  double w_hz = 2e9;             // mmWave bandwidth
  double range_max_m = 50.0;     // hard mmWave range cap
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  double ci95_halfwidth = 0.0;
};

// Total thermal noise power over the link bandwidth: N0 + 10*log10(W).
double noise_floor_dbm(const LinkParams& params);

// Mean path loss at distance delta: 69.6 + 20.9*log10(delta), zero shadowing.
double path_loss_mean_db(double delta_m);

// p_tx - theta - noise_floor - mean path loss. A hop succeeds when the
// shadowing draw stays below this margin.
double link_margin_db(double delta_m, const LinkParams& params);

// P(hop success) = Phi(margin / sigma); 0 beyond the range cap, and a step
// function of the margin when sigma = 0.
double p_hop_analytic(double delta_m, const LinkParams& params);

// Stochastic cross-check of p_hop_analytic. One shadowing draw per trial,
// each trial's stream derived from (seed, trial index) so execution order
// never matters.
MonteCarloEstimate p_hop_monte_carlo(double delta_m, const LinkParams& params,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace fogcell
