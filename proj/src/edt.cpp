#include "frontkit/edt.hpp"

#include <limits>

namespace frontkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower envelope of parabolas q -> (x - q)^2 + f[q] (Felzenszwalb &
// Huttenlocher). f entries may be +inf (no source in that scanline);
// infinite parabolas are never pushed, so results stay exact for the
// integer-valued inputs used here.
void dt1d(const std::vector<double>& f, std::vector<double>& d,
          std::vector<int>& v, std::vector<double>& z) {
  const int n = int(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s = 0.0;
    while (k >= 0) {
      int p = v[k];
      if (f[p] == kInf) {  // only the seed parabola can be infinite
        --k;
        continue;
      }
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) /
          (2.0 * q - 2.0 * p);
      if (s <= z[k]) --k;
      else break;
    }
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
    } else {
      ++k;
      v[k] = q;
      z[k] = s;
    }
    z[k + 1] = kInf;
  }
  if (f[v[0]] == kInf) {
    for (int q = 0; q < n; ++q) d[q] = kInf;
    return;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    double dq = double(q) - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

std::vector<double> squared_distance_to_false(const BitMask& fg) {
  const int rows = fg.rows, cols = fg.cols;
  std::vector<double> dist(std::size_t(rows) * cols, 0.0);

  // pass 1: per column, row distance to the nearest background cell
  for (int c = 0; c < cols; ++c) {
    double d = kInf;
    for (int r = 0; r < rows; ++r) {
      d = fg.at(r, c) ? d + 1.0 : 0.0;
      dist[fg.idx(r, c)] = d;
    }
    d = kInf;
    for (int r = rows - 1; r >= 0; --r) {
      d = fg.at(r, c) ? d + 1.0 : 0.0;
      std::size_t i = fg.idx(r, c);
      if (d < dist[i]) dist[i] = d;
      double x = dist[i];
      dist[i] = x == kInf ? kInf : x * x;
    }
  }

  // pass 2: per row, combine columns with the parabola envelope
  std::vector<double> f(cols), d(cols), z(std::size_t(cols) + 1);
  std::vector<int> v(cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) f[c] = dist[fg.idx(r, c)];
    dt1d(f, d, v, z);
    for (int c = 0; c < cols; ++c) dist[fg.idx(r, c)] = d[c];
  }
  return dist;
}

}  // namespace frontkit
