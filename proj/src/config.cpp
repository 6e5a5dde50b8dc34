#include "fogcell/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fogcell {

namespace {

const std::set<std::string> kKnownKeys = {
    "p_tx_dbm",      "theta_db",       "sigma_db",        "n0_dbm_per_hz",
    "w_hz",          "range_max_m",    "t_slot_us",       "t_retran_us",
    "c_total_mbps",  "c_ave_mbps",     "hop_mode",        "rho_min",
    "rho_max",       "rho_step",       "la_list",         "n_max",
    "trials",        "seed",           "calib_targets",   "calib_offset_min_db",
    "calib_offset_max_db", "calib_offset_step_db", "calib_sigma_min_db",
    "calib_sigma_max_db",  "calib_sigma_step_db",  "road_len_m",
    "rsu_x_m",       "rsu_radius_m",   "arrival_model",   "arrival_rho",
    "v_mps",         "dt_s",           "duration_s",      "ctrl_period_s",
};

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not a number: '" +
                             value + "'");
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config key '" + key + "': not a number: '" +
                             value + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key +
                             "': not an unsigned integer: '" + value + "'");
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config key '" + key +
                             "': not an unsigned integer: '" + value + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) {
    out.push_back(trim(part));
  }
  return out;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  // Built-in defaults. Link timing and capacity values are the standard
  // fog-cell parameter set; p_tx/theta/sigma are plain configuration knobs
  // refined by the calibrate command.
  const std::pair<const char*, const char*> defaults[] = {
      {"p_tx_dbm", "30"},
      {"theta_db", "10"},
      {"sigma_db", "5.8"},
      {"n0_dbm_per_hz", "-174"},
      {"w_hz", "2e9"},
      {"range_max_m", "50"},
      {"t_slot_us", "5"},
      {"t_retran_us", "5"},
      {"c_total_mbps", "1000"},
      {"c_ave_mbps", "33"},
      {"hop_mode", "homogeneous"},
      {"rho_min", "0.03"},
      {"rho_max", "0.20"},
      {"rho_step", "0.005"},
      {"la_list", "300,400,500"},
      {"n_max", "50"},
      {"trials", "100000"},
      {"seed", "42"},
      {"calib_targets", "300:0.32,400:0.46,500:0.63"},
      {"calib_offset_min_db", "5"},
      {"calib_offset_max_db", "25"},
      {"calib_offset_step_db", "0.5"},
      {"calib_sigma_min_db", "2"},
      {"calib_sigma_max_db", "10"},
      {"calib_sigma_step_db", "0.5"},
      {"road_len_m", "2000"},
      {"rsu_x_m", "1000"},
      {"rsu_radius_m", "150"},
      {"arrival_model", "equidistant"},
      {"arrival_rho", "0.05"},
      {"v_mps", "20"},
      {"dt_s", "0.1"},
      {"duration_s", "600"},
      {"ctrl_period_s", "1"},
  };
  for (const auto& [k, v] : defaults) {
    entries_.emplace_back(k, v);
  }
  std::sort(entries_.begin(), entries_.end());
}

void ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

void ExperimentConfig::load_text(const std::string& text,
                                 const std::string& origin) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                               ": expected key=value, got '" + line + "'");
    }
    try {
      set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (kKnownKeys.find(key) == kKnownKeys.end()) {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
  validate(key, value);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const auto& entry, const std::string& k) { return entry.first < k; });
  it->second = value;
}

void ExperimentConfig::validate(const std::string& key,
                                const std::string& value) const {
  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      throw std::invalid_argument("config key '" + key + "': " + what + ": '" +
                               value + "'");
    }
  };
  if (key == "hop_mode") {
    require(value == "homogeneous" || value == "residual",
            "must be homogeneous or residual");
    return;
  }
  if (key == "arrival_model") {
    require(value == "equidistant" || value == "poisson",
            "must be equidistant or poisson");
    return;
  }
  if (key == "la_list") {
    const auto parts = split(value, ',');
    require(!parts.empty(), "must be a comma-separated list of distances");
    for (const auto& p : parts) {
      require(parse_double(key, p) > 0.0, "distances must be positive");
    }
    return;
  }
  if (key == "calib_targets") {
    const auto parts = split(value, ',');
    require(!parts.empty(), "must be la:delay_ms pairs");
    for (const auto& p : parts) {
      const auto colon = p.find(':');
      require(colon != std::string::npos, "must be la:delay_ms pairs");
      require(parse_double(key, p.substr(0, colon)) > 0.0 &&
                  parse_double(key, p.substr(colon + 1)) > 0.0,
              "pair values must be positive");
    }
    return;
  }
  if (key == "trials" || key == "seed" || key == "n_max") {
    const std::uint64_t v = parse_u64(key, value);
    if (key != "seed") {
      require(v >= 1, "must be at least 1");
    }
    return;
  }
  const double v = parse_double(key, value);
  static const std::set<std::string> positive = {
      "w_hz",        "range_max_m", "t_slot_us",  "t_retran_us",
      "c_total_mbps", "c_ave_mbps", "rho_min",    "rho_max",
      "rho_step",    "road_len_m",  "rsu_radius_m", "v_mps",
      "dt_s",        "ctrl_period_s", "calib_offset_step_db",
      "calib_sigma_step_db"};
  static const std::set<std::string> non_negative = {
      "sigma_db", "arrival_rho", "duration_s", "rsu_x_m"};
  if (positive.count(key)) {
    require(v > 0.0, "must be positive");
  } else if (non_negative.count(key)) {
    require(v >= 0.0, "must be non-negative");
  }
}

std::string ExperimentConfig::header_comment() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += "# " + k + "=" + v + "\n";
  }
  return out;
}

LinkParams ExperimentConfig::link() const {
  LinkParams p;
  p.p_tx_dbm = get_double("p_tx_dbm");
  p.theta_db = get_double("theta_db");
  p.sigma_db = get_double("sigma_db");
  p.n0_dbm_per_hz = get_double("n0_dbm_per_hz");
  p.w_hz = get_double("w_hz");
  p.range_max_m = get_double("range_max_m");
  return p;
}

DelayParams ExperimentConfig::delay_params() const {
  return {get_double("t_slot_us") * 1e-6, get_double("t_retran_us") * 1e-6};
}

CellCapacity ExperimentConfig::capacity() const {
  CellCapacity c;
  c.b_total = 1.0;
  c.c_total_mbps = get_double("c_total_mbps");
  c.c_ave_mbps = get_double("c_ave_mbps");
  return c;
}

FogCellConfig ExperimentConfig::fogcell() const {
  FogCellConfig f;
  f.road_len_m = get_double("road_len_m");
  f.rsu_x_m = get_double("rsu_x_m");
  f.rsu_radius_m = get_double("rsu_radius_m");
  f.arrival_model = get_raw("arrival_model") == "poisson"
                        ? ArrivalModel::kPoisson
                        : ArrivalModel::kEquidistant;
  f.arrival_rho = get_double("arrival_rho");
  f.v_mps = get_double("v_mps");
  f.dt_s = get_double("dt_s");
  f.duration_s = get_double("duration_s");
  f.ctrl_period_s = get_double("ctrl_period_s");
  f.seed = seed();
  return f;
}

HopMode ExperimentConfig::hop_mode() const {
  return get_raw("hop_mode") == "residual" ? HopMode::kResidual
                                           : HopMode::kHomogeneous;
}

std::vector<double> ExperimentConfig::rho_grid() const {
  const double lo = get_double("rho_min");
  const double hi = get_double("rho_max");
  const double step = get_double("rho_step");
  if (lo >= hi) {
    throw std::invalid_argument("config: rho_min must be below rho_max");
  }
  std::vector<double> grid;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  grid.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid.push_back(lo + i * step);
  }
  return grid;
}

std::vector<double> ExperimentConfig::la_list() const {
  std::vector<double> out;
  for (const auto& p : split(get_raw("la_list"), ',')) {
    out.push_back(parse_double("la_list", p));
  }
  return out;
}

std::vector<CalibrationTarget> ExperimentConfig::calibration_targets() const {
  std::vector<CalibrationTarget> out;
  for (const auto& p : split(get_raw("calib_targets"), ',')) {
    const auto colon = p.find(':');
    // delay targets are given in ms, the model works in seconds
    out.push_back({parse_double("calib_targets", p.substr(0, colon)),
                   parse_double("calib_targets", p.substr(colon + 1)) * 1e-3});
  }
  return out;
}

CalibrationGrid ExperimentConfig::calibration_grid() const {
  CalibrationGrid g;
  g.offset_min_db = get_double("calib_offset_min_db");
  g.offset_max_db = get_double("calib_offset_max_db");
  g.offset_step_db = get_double("calib_offset_step_db");
  g.sigma_min_db = get_double("calib_sigma_min_db");
  g.sigma_max_db = get_double("calib_sigma_max_db");
  g.sigma_step_db = get_double("calib_sigma_step_db");
  return g;
}

int ExperimentConfig::n_max() const {
  return static_cast<int>(parse_u64("n_max", get_raw("n_max")));
}

std::uint64_t ExperimentConfig::trials() const {
  return parse_u64("trials", get_raw("trials"));
}

std::uint64_t ExperimentConfig::seed() const {
  return parse_u64("seed", get_raw("seed"));
}

double ExperimentConfig::get_double(const std::string& key) const {
  return parse_double(key, get_raw(key));
}

std::string ExperimentConfig::get_raw(const std::string& key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const auto& entry, const std::string& k) { return entry.first < k; });
  if (it == entries_.end() || it->first != key) {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
  return it->second;
}

}  // namespace fogcell
