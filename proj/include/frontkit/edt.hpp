#pragma once

#include <vector>

#include "frontkit/morphology.hpp"

namespace frontkit {

/// Exact squared Euclidean distance from every pixel to the nearest pixel
/// where fg is false. Foreground pixels with no background anywhere get
/// +infinity. Squared distances are exact integers stored as doubles.
std::vector<double> squared_distance_to_false(const BitMask& fg);

}  // namespace frontkit
