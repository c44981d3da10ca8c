#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frontkit {

/// Integer pixel coordinate; ordered lexicographically (row, col).
struct Pix {
  int row = 0;
  int col = 0;
  auto operator<=>(const Pix&) const = default;
};

inline int chebyshev(Pix a, Pix b) {
  int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return dr > dc ? dr : dc;
}

/// 2-D scalar field (e.g. SST) on a uniform lon/lat grid with a
/// validity mask. Row 0 / col 0 centers sit at (lat0, lon0); row r is at
/// lat0 + r*dlat. Values are stored as float32 so that file round-trips
/// are bit-exact.
struct ScalarGrid {
  int rows = 0;
  int cols = 0;
  double lat0 = 0.0;
  double lon0 = 0.0;
  double dlat = 0.05;
  double dlon = 0.05;
  double km_per_px = 5.0;
  std::vector<float> values;
  std::vector<std::uint8_t> valid;

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols + c;
  }
  bool in_bounds(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }
  float at(int r, int c) const { return values[idx(r, c)]; }
  bool is_valid(int r, int c) const { return valid[idx(r, c)] != 0; }

  double lon_of_col(int c) const { return lon0 + c * dlon; }
  double lat_of_row(int r) const { return lat0 + r * dlat; }
  int col_of_lon(double lon) const;
  int row_of_lat(double lat) const;

  static ScalarGrid make(int rows, int cols, float fill_value = 0.0f);
};

/// Ordered polyline front in grid coordinates plus per-front metrics.
/// id 0 means unassigned.
struct FrontRecord {
  int id = 0;
  std::vector<Pix> points;
  double length_km = 0.0;
  double width_km = 0.0;
  double width_px = 0.0;
  double intensity_c_per_km = 0.0;
  std::optional<double> offshore_km;

  Pix head() const { return points.front(); }
  Pix tail() const { return points.back(); }
};

enum class GridFormat { Fgrid, Csv };

/// Geometry/fill for headerless CSV input (the fgrid header carries its own).
struct CsvGeometry {
  double lat0 = 0.0;
  double lon0 = 0.0;
  double dlat = 0.05;
  double dlon = 0.05;
  std::optional<float> fill;
};

ScalarGrid read_grid(const std::string& path, GridFormat format,
                     const CsvGeometry& geo = {});

void write_fgrid(const ScalarGrid& grid, const std::string& path,
                 bool binary = true, float fill_value = -9999.0f);

/// GeoJSON FeatureCollection of LineStrings, one per front; properties
/// carry id and all metrics. Output is byte-stable for identical inputs.
std::string fronts_geojson_string(const std::vector<FrontRecord>& fronts,
                                  const ScalarGrid& grid);
void write_fronts_geojson(const std::vector<FrontRecord>& fronts,
                          const ScalarGrid& grid, const std::string& path);

}  // namespace frontkit
