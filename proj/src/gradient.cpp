#include "frontkit/gradient.hpp"

#include <cmath>
#include <numbers>

#include "frontkit/errors.hpp"

namespace frontkit {

namespace {

constexpr int kFx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
constexpr int kFy[3][3] = {{1, 2, 1}, {0, 0, 0}, {-1, -2, -1}};

}  // namespace

GradientField sobel_gradient(const ScalarGrid& grid) {
  if (grid.rows < 3 || grid.cols < 3)
    fail(ErrKind::Size, "sobel_gradient needs a grid of at least 3x3, got " +
                            std::to_string(grid.rows) + "x" +
                            std::to_string(grid.cols));

  GradientField f;
  f.rows = grid.rows;
  f.cols = grid.cols;
  const std::size_t n = std::size_t(f.rows) * f.cols;
  f.tx.assign(n, 0.0);
  f.ty.assign(n, 0.0);
  f.mag.assign(n, 0.0);
  f.dir.assign(n, 0.0);
  f.valid.assign(n, 0);

  for (int r = 1; r < grid.rows - 1; ++r) {
    for (int c = 1; c < grid.cols - 1; ++c) {
      bool ok = true;
      for (int dr = -1; dr <= 1 && ok; ++dr)
        for (int dc = -1; dc <= 1 && ok; ++dc)
          ok = grid.is_valid(r + dr, c + dc);
      if (!ok) continue;

      double ax = 0.0, ay = 0.0;
      for (int dr = 0; dr < 3; ++dr) {
        for (int dc = 0; dc < 3; ++dc) {
          double v = double(grid.at(r + dr - 1, c + dc - 1));
          ax += kFx[dr][dc] * v;
          ay += kFy[dr][dc] * v;
        }
      }
      const std::size_t i = f.idx(r, c);
      double tx = ax / 8.0;
      double ty = ay / 8.0;
      f.tx[i] = tx;
      f.ty[i] = ty;
      f.mag[i] = std::sqrt(tx * tx + ty * ty);
      double d = std::atan2(ty, tx);
      if (d >= std::numbers::pi) d = -std::numbers::pi;  // keep [-pi, pi)
      f.dir[i] = d;
      f.valid[i] = 1;
    }
  }
  return f;
}

}  // namespace frontkit
