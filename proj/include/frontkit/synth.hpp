#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frontkit/fronts.hpp"
#include "frontkit/grid.hpp"

namespace frontkit {

/// Curve vertex in (row, col) grid coordinates, fractional allowed.
using CurvePoint = std::pair<double, double>;
using Curve = std::vector<CurvePoint>;

/// Synthetic field description: tanh steps across the given curves plus
/// seeded Gaussian noise on a constant base.
struct SynthSpec {
  int rows = 64;
  int cols = 64;
  double base_c = 20.0;
  double amplitude_c = 1.0;
  double half_width_px = 2.0;
  double noise_sigma_c = 0.0;
  std::uint64_t seed = 1;
  std::vector<Curve> curves;
};

/// Deterministic Gaussian stream: SplitMix64 bit mixer -> uniform doubles
/// in (0,1) -> Box-Muller. Fixed constants, reproducible everywhere.
class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed) {}
  double next();

private:
  std::uint64_t next_u64();
  double next_unit();  // uniform in (0,1)
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct SynthResult {
  ScalarGrid grid;
  std::vector<Curve> truth;
};

SynthResult synth_field(const SynthSpec& spec);

struct TruthScore {
  std::optional<double> mean_error_px;  // missing when nothing detected
  double recall = 0.0;
};

/// Localization error: mean over detected front points of the distance to
/// the nearest truth curve. Recall: fraction of truth samples (unit
/// arc-length spacing) within 2 px of a detected point.
TruthScore truth_score(const FrontSet& detected,
                       const std::vector<Curve>& truth);

}  // namespace frontkit
