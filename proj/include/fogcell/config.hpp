#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fogcell/bandwidth.hpp"
#include "fogcell/delay.hpp"
#include "fogcell/link.hpp"
#include "fogcell/sim.hpp"

namespace fogcell {

// Full experiment configuration: link budget, delay timing, cell capacity,
// mobility run, sweep grids and the master seed. Built-in defaults follow
// the standard fog-cell parameter set; file values override defaults and
// flag overrides win over the file.
class ExperimentConfig {
 public:
  ExperimentConfig();

  // Parses line-oriented `key=value` text. '#' starts a comment. Unknown
  // keys and out-of-range values throw std::runtime_error with the line
  // number in the message.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin);

  // Single override, same validation as file entries.
  void set(const std::string& key, const std::string& value);

  // `# key=value` header lines with the full effective config, sorted by
  // key; prepended to every output file.
  std::string header_comment() const;

  LinkParams link() const;
  DelayParams delay_params() const;
  CellCapacity capacity() const;
  FogCellConfig fogcell() const;
  HopMode hop_mode() const;
  std::vector<double> rho_grid() const;
  std::vector<double> la_list() const;
  std::vector<CalibrationTarget> calibration_targets() const;
  CalibrationGrid calibration_grid() const;
  int n_max() const;
  std::uint64_t trials() const;
  std::uint64_t seed() const;

  double get_double(const std::string& key) const;
  std::string get_raw(const std::string& key) const;

 private:
  void validate(const std::string& key, const std::string& value) const;

  std::vector<std::pair<std::string, std::string>> entries_;  // sorted by key
};

}  // namespace fogcell
