#pragma once

#include "frontkit/bayes.hpp"
#include "frontkit/config.hpp"
#include "frontkit/fronts.hpp"
#include "frontkit/gradient.hpp"
#include "frontkit/grid.hpp"
#include "frontkit/morphology.hpp"

namespace frontkit {

struct DetectResult {
  GradientField field;
  ZoneMask mask;      // resolved binary mask (Frontal/NonFrontal/Invalid)
  BitMask zone;       // Frontal cells
  BitMask skeleton;   // after trimming (bfdt) or raw MDM (gradient)
  FrontSet fronts;    // metrics filled, ids 1..P
};

/// Full single-day detection. method "bfdt" runs the Bayesian zone,
/// skeleton trimming, merging and ring deletion; method "gradient" is the
/// hysteresis baseline with none of those refinements.
DetectResult run_detect(const ScalarGrid& grid, const Config& cfg);

}  // namespace frontkit
