#pragma once

#include <cstdint>
#include <vector>

#include "frontkit/grid.hpp"

namespace frontkit {

/// Per-cell Sobel gradient of a ScalarGrid. tx/ty are normalized so a
/// unit-per-pixel ramp yields 1 (raw 3x3 response divided by 8); units are
/// degC per pixel. dir is atan2(ty, tx) in [-pi, pi). Cells whose 3x3
/// neighborhood leaves the grid or touches an invalid cell are invalid.
struct GradientField {
  int rows = 0;
  int cols = 0;
  std::vector<double> tx, ty, mag, dir;
  std::vector<std::uint8_t> valid;

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols + c;
  }
  bool is_valid(int r, int c) const { return valid[idx(r, c)] != 0; }
};

GradientField sobel_gradient(const ScalarGrid& grid);

}  // namespace frontkit
