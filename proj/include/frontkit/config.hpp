#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontkit/synth.hpp"

namespace frontkit {

/// Pipeline parameters. Defaults are the operational values; see README.
struct Config {
  double p_hi = 0.10;
  double p_lo = 0.20;
  double lde_bd_tol = 0.1;
  double dse_t = 20.0;
  int merge_radius = 3;
  int min_len_px = 20;
  double length_ratio = 0.5;
  double km_per_px = 5.0;
  std::string method = "bfdt";  // bfdt | gradient

  void validate() const;  // throws Argument error on bad values
};

/// Flat key-value file: `key = value`, '#' comments, blank lines ignored.
/// Unknown keys are an error.
Config load_config_file(const std::string& path, Config base = {});

/// key=value lines for every config field, sorted; used for run manifests.
std::string config_manifest(const Config& cfg);

/// Synth spec file: same flat format with keys n_rows, n_cols, base,
/// amplitude, half_width, noise_sigma, seed, and one `curve` line per
/// truth polyline (`curve = r0,c0 r1,c1 ...`).
SynthSpec load_synth_spec(const std::string& path);

}  // namespace frontkit
