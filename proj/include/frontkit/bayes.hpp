#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "frontkit/gradient.hpp"
#include "frontkit/grid.hpp"

namespace frontkit {

/// CDF-percentile gradient thresholds. upper >= lower >= 0.
struct Thresholds {
  double upper = 0.0;
  double lower = 0.0;
  double p_hi = 0.10;
  double p_lo = 0.20;
};

enum class ZoneLabel : std::uint8_t {
  NonFrontal = 0,
  Frontal = 1,
  Undetermined = 2,
  Invalid = 3,
};

struct ZoneMask {
  int rows = 0;
  int cols = 0;
  std::vector<ZoneLabel> labels;

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols + c;
  }
  ZoneLabel at(int r, int c) const { return labels[idx(r, c)]; }
  std::size_t count(ZoneLabel l) const;
};

/// Neighborhood edge operators: lde is the similarity between a pair's
/// difference and the local maximum amplitude, bd the pair difference
/// normalized by the neighborhood range. A flat neighborhood is defined
/// as (0.5, 0).
struct NeighborStats {
  double lde = 0.5;
  double bd = 0.0;
};

struct BayesConfig {
  double p_hi = 0.10;
  double p_lo = 0.20;
  double tol = 0.1;  // lde/bd similarity window
};

/// Sort valid magnitudes descending; upper = value at 1-based rank
/// ceil(p_hi*N), lower at ceil(p_lo*N).
Thresholds thresholds_from_cdf(const GradientField& field, double p_hi = 0.10,
                               double p_lo = 0.20);

/// mag > upper -> Frontal, mag < lower -> NonFrontal, else Undetermined;
/// invalid gradient cells stay Invalid.
ZoneMask classify_three_way(const GradientField& field, const Thresholds& th);

/// Linear prior over [lower, upper]; returns (p_front, p_non).
/// Requires upper > lower and lower <= t_e <= upper.
std::pair<double, double> prior(double t_e, const Thresholds& th);

/// v = [A,B,C,D,F,G,H,I], the 8 scalar values around the cell in
/// row-major order with the center skipped. Pairs are the diametric
/// opposites (A,I), (B,H), (C,G), (D,F).
NeighborStats lde_bd(const std::array<double, 8>& v);

/// Likelihood of the evidence for cell E against the population of all
/// valid cells. mags/stats enumerate every valid cell (E included; strict
/// magnitude comparisons exclude it). Empty reference sets give 1.
std::pair<double, double> likelihood(double mag_e, const NeighborStats& e,
                                     const std::vector<double>& mags,
                                     const std::vector<NeighborStats>& stats,
                                     double tol = 0.1);

/// Frontal iff l_front*p_front >= l_non*p_non (ties go frontal).
bool bayes_decide(const std::pair<double, double>& pri,
                  const std::pair<double, double>& like);

/// Resolve a three-way mask to binary using the Bayesian decision per
/// undetermined cell. Degenerate thresholds (upper == lower) declare the
/// whole field NonFrontal.
ZoneMask resolve_zone(const ScalarGrid& grid, const GradientField& field,
                      const Thresholds& th, double tol = 0.1);

/// Full detection: gradient -> thresholds -> three-way -> Bayesian
/// resolution. Output labels are Frontal/NonFrontal/Invalid only.
ZoneMask detect_frontal_zone(const ScalarGrid& grid,
                             const BayesConfig& cfg = {});

/// Canny-style baseline: Undetermined cells become Frontal iff 8-connected
/// to a Frontal cell through Undetermined/Frontal cells.
ZoneMask hysteresis_zone(const GradientField& field, const Thresholds& th);

}  // namespace frontkit
