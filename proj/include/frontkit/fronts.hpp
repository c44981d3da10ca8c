#pragma once

#include <string>
#include <vector>

#include "frontkit/gradient.hpp"
#include "frontkit/grid.hpp"
#include "frontkit/morphology.hpp"

namespace frontkit {

struct FrontSet {
  std::vector<FrontRecord> fronts;
  std::string day;  // date tag of the source grid
};

/// Trace the skeleton into ordered polylines. Components are split at
/// intersection pixels (8-degree >= 3) into simple paths; fronts with
/// fewer than min_len_px points are dropped.
FrontSet vectorize(const BitMask& skeleton, int min_len_px = 20);

/// Merge fronts whose endpoints lie within Chebyshev distance `radius`,
/// nearest pair first (ties by gradient-direction difference at the
/// joining ends), filling gaps diagonal-first. Repeats until no merge
/// applies.
FrontSet merge_and_fill(FrontSet fs, int radius, const GradientField& field);

/// Remove fronts that close on themselves (head in the tail's 3x3
/// neighborhood) and truncate partial rings, repeating until stable.
FrontSet delete_rings(FrontSet fs);

/// Fill length/width/intensity/offshore metrics for one front. Throws a
/// consistency error if a front point lies outside the zone.
FrontRecord front_metrics(FrontRecord front, const BitMask& zone,
                          const GradientField& field, const ScalarGrid& grid);

/// Batch variant: shares the distance transforms across fronts.
void compute_metrics(FrontSet& fs, const BitMask& zone,
                     const GradientField& field, const ScalarGrid& grid);

}  // namespace frontkit
