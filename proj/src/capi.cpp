#include "fogcell.h"

#include <fstream>
#include <stdexcept>
#include <string>

#include "fogcell/config.hpp"
#include "fogcell/delay.hpp"
#include "fogcell/reports.hpp"

struct fc_config {
  fogcell::ExperimentConfig impl;
  std::string scratch;  // backs fc_config_get return values
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_version;

void set_error(const std::string& msg) { g_last_error = msg; }

fc_status write_file(const char* path, const std::string& content) {
  if (path == nullptr) {
    set_error("output path is null");
    return FC_ERR_INVALID_ARGUMENT;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    set_error(std::string("cannot open output file: ") + path);
    return FC_ERR_IO;
  }
  out << content;
  if (!out) {
    set_error(std::string("write failed: ") + path);
    return FC_ERR_IO;
  }
  return FC_OK;
}

// Invalid parameters map to FC_ERR_INVALID_ARGUMENT, everything else the
// model throws (e.g. no reachable sweep point) to FC_ERR_MODEL.
template <typename Fn>
fc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FC_ERR_MODEL;
  }
}

}  // namespace

extern "C" {

const char* fc_version(void) {
  g_version = fogcell::tool_version();
  return g_version.c_str();
}

const char* fc_last_error(void) { return g_last_error.c_str(); }

fc_config* fc_config_new(void) {
  try {
    return new fc_config;
  } catch (...) {
    return nullptr;
  }
}

void fc_config_free(fc_config* cfg) { delete cfg; }

fc_status fc_config_load_file(fc_config* cfg, const char* path) {
  if (cfg == nullptr || path == nullptr) {
    set_error("null config or path");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    cfg->impl.load_file(path);
    return FC_OK;
  });
}

fc_status fc_config_set(fc_config* cfg, const char* key, const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) {
    set_error("null config, key or value");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    cfg->impl.set(key, value);
    return FC_OK;
  });
}

const char* fc_config_get(fc_config* cfg, const char* key) {
  if (cfg == nullptr || key == nullptr) {
    return nullptr;
  }
  try {
    cfg->scratch = cfg->impl.get_raw(key);
    return cfg->scratch.c_str();
  } catch (const std::exception&) {
    return nullptr;
  }
}

fc_status fc_run_delay_sweep(const fc_config* cfg, const char* out_csv) {
  if (cfg == nullptr) {
    set_error("null config");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    return write_file(out_csv, fogcell::run_delay_sweep_csv(cfg->impl));
  });
}

fc_status fc_run_throughput(const fc_config* cfg, const char* out_csv) {
  if (cfg == nullptr) {
    set_error("null config");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    return write_file(out_csv, fogcell::run_throughput_csv(cfg->impl));
  });
}

fc_status fc_run_fogsim(const fc_config* cfg, const char* events_csv,
                        const char* summary_path) {
  if (cfg == nullptr) {
    set_error("null config");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const fogcell::FogsimOutput out = fogcell::run_fogsim(cfg->impl);
    const fc_status rc = write_file(events_csv, out.events_csv);
    if (rc != FC_OK) {
      return rc;
    }
    return write_file(summary_path, out.summary_text);
  });
}

fc_status fc_run_calibrate(const fc_config* cfg, const char* report_path,
                           const char* fragment_path) {
  if (cfg == nullptr) {
    set_error("null config");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const fogcell::CalibrateOutput out = fogcell::run_calibrate(cfg->impl);
    const fc_status rc = write_file(report_path, out.report_text);
    if (rc != FC_OK) {
      return rc;
    }
    return write_file(fragment_path, out.fragment_text);
  });
}

fc_status fc_p_hop(const fc_config* cfg, double delta_m, double* p_out) {
  if (cfg == nullptr || p_out == nullptr) {
    set_error("null config or output pointer");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *p_out = fogcell::p_hop_analytic(delta_m, cfg->impl.link());
    return FC_OK;
  });
}

fc_status fc_expected_delay(const fc_config* cfg, double la_m, double rho,
                            double* delay_s_out, int* reachable_out,
                            int* hops_out) {
  if (cfg == nullptr || delay_s_out == nullptr || reachable_out == nullptr) {
    set_error("null config or output pointer");
    return FC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const fogcell::DelayResult r = fogcell::expected_delay(
        la_m, rho, cfg->impl.link(), cfg->impl.delay_params(),
        cfg->impl.hop_mode());
    *delay_s_out = r.delay_s;
    *reachable_out = r.reachable ? 1 : 0;
    if (hops_out != nullptr) {
      *hops_out = r.k;
    }
    return FC_OK;
  });
}

}  // extern "C"
