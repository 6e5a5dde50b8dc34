#pragma once

#include <string>

#include "fogcell/config.hpp"

namespace fogcell {

// Deterministic text renderers behind the CLI subcommands. Every output
// starts with '#' header lines carrying the tool version and the full
// effective config.

std::string tool_version();

// Fig. 4-style sweep: one row per (la, rho) grid point plus a trailing
// turning-point row per la (reachable column set to "turning_point").
std::string run_delay_sweep_csv(const ExperimentConfig& config);

// Fig. 5-style comparison: traditional vs adaptive mean throughput for
// n = 1..n_max.
std::string run_throughput_csv(const ExperimentConfig& config);

struct FogsimOutput {
  std::string events_csv;
  std::string summary_text;  // key=value lines
};
FogsimOutput run_fogsim(const ExperimentConfig& config);

struct CalibrateOutput {
  std::string report_text;
  std::string fragment_text;  // config fragment accepted by parse_config
};
CalibrateOutput run_calibrate(const ExperimentConfig& config);

}  // namespace fogcell
