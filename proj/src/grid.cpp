#include "frontkit/grid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frontkit/errors.hpp"

namespace frontkit {

namespace {

bool bits_equal(float a, float b) {
  return std::bit_cast<std::uint32_t>(a) == std::bit_cast<std::uint32_t>(b);
}

std::string line_err(const std::string& path, int line, const std::string& what) {
  std::ostringstream os;
  os << path << ": line " << line << ": " << what;
  return os.str();
}

// masks fill-valued and NaN cells
void apply_fill(ScalarGrid& g, std::optional<float> fill) {
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    bool bad = std::isnan(g.values[i]);
    if (fill && bits_equal(g.values[i], *fill)) bad = true;
    g.valid[i] = bad ? 0 : 1;
  }
}

ScalarGrid read_fgrid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrKind::Io, "cannot open " + path);

  std::string line;
  auto next_line = [&](int n) -> std::string {
    if (!std::getline(in, line))
      fail(ErrKind::Format, line_err(path, n, "unexpected end of header"));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };

  if (next_line(1) != "FGRID 1")
    fail(ErrKind::Format, line_err(path, 1, "expected 'FGRID 1'"));

  ScalarGrid g;
  {
    std::istringstream ls(next_line(2));
    if (!(ls >> g.rows >> g.cols) || g.rows <= 0 || g.cols <= 0)
      fail(ErrKind::Format, line_err(path, 2, "expected positive 'nrows ncols'"));
  }
  {
    std::istringstream ls(next_line(3));
    if (!(ls >> g.lat0 >> g.lon0 >> g.dlat >> g.dlon) || g.dlat <= 0 || g.dlon <= 0)
      fail(ErrKind::Format, line_err(path, 3, "expected 'lat0 lon0 dlat dlon' with positive steps"));
  }
  float fill = 0.0f;
  {
    std::istringstream ls(next_line(4));
    std::string kw;
    if (!(ls >> kw >> fill) || kw != "fill")
      fail(ErrKind::Format, line_err(path, 4, "expected 'fill <value>'"));
  }
  std::string mode = next_line(5);
  if (mode != "binary" && mode != "ascii")
    fail(ErrKind::Format, line_err(path, 5, "expected 'binary' or 'ascii'"));

  const std::size_t n = std::size_t(g.rows) * g.cols;
  g.values.resize(n);
  g.valid.assign(n, 1);

  if (mode == "binary") {
    std::vector<unsigned char> buf(n * 4);
    in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size()));
    if (std::size_t(in.gcount()) != buf.size())
      fail(ErrKind::Size, path + ": payload has fewer than " +
                              std::to_string(n) + " float32 values");
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t u = std::uint32_t(buf[4 * i]) |
                        std::uint32_t(buf[4 * i + 1]) << 8 |
                        std::uint32_t(buf[4 * i + 2]) << 16 |
                        std::uint32_t(buf[4 * i + 3]) << 24;
      g.values[i] = std::bit_cast<float>(u);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(in >> g.values[i]))
        fail(ErrKind::Size, path + ": payload has fewer than " +
                                std::to_string(n) + " values");
    }
  }
  apply_fill(g, fill);
  return g;
}

ScalarGrid read_csv(const std::string& path, const CsvGeometry& geo) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::Io, "cannot open " + path);

  std::vector<float> vals;
  int cols = -1, row_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int row_cols = 0;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t pos = 0;
        float v = std::stof(cell, &pos);
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument(cell);
        vals.push_back(v);
      } catch (const std::exception&) {
        fail(ErrKind::Format, line_err(path, row_no, "bad number '" + cell + "'"));
      }
      ++row_cols;
    }
    if (cols < 0) cols = row_cols;
    else if (row_cols != cols)
      fail(ErrKind::Size, line_err(path, row_no,
                                   "row has " + std::to_string(row_cols) +
                                       " cells, expected " + std::to_string(cols)));
  }
  if (cols <= 0 || vals.empty()) fail(ErrKind::Format, path + ": empty CSV");

  ScalarGrid g;
  g.cols = cols;
  g.rows = int(vals.size()) / cols;
  g.lat0 = geo.lat0;
  g.lon0 = geo.lon0;
  g.dlat = geo.dlat;
  g.dlon = geo.dlon;
  g.values = std::move(vals);
  g.valid.assign(g.values.size(), 1);
  apply_fill(g, geo.fill);
  return g;
}

}  // namespace

int ScalarGrid::col_of_lon(double lon) const {
  return int(std::lround((lon - lon0) / dlon));
}

int ScalarGrid::row_of_lat(double lat) const {
  return int(std::lround((lat - lat0) / dlat));
}

ScalarGrid ScalarGrid::make(int rows, int cols, float fill_value) {
  ScalarGrid g;
  g.rows = rows;
  g.cols = cols;
  g.values.assign(std::size_t(rows) * cols, fill_value);
  g.valid.assign(std::size_t(rows) * cols, 1);
  return g;
}

ScalarGrid read_grid(const std::string& path, GridFormat format,
                     const CsvGeometry& geo) {
  return format == GridFormat::Fgrid ? read_fgrid(path) : read_csv(path, geo);
}

void write_fgrid(const ScalarGrid& grid, const std::string& path, bool binary,
                 float fill_value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrKind::Io, "cannot write " + path);

  out << "FGRID 1\n"
      << grid.rows << ' ' << grid.cols << '\n';
  {
    std::ostringstream os;
    os.precision(17);
    os << grid.lat0 << ' ' << grid.lon0 << ' ' << grid.dlat << ' ' << grid.dlon;
    out << os.str() << '\n';
  }
  {
    std::ostringstream os;
    os.precision(9);
    os << "fill " << fill_value;
    out << os.str() << '\n';
  }
  out << (binary ? "binary" : "ascii") << '\n';

  const std::size_t n = grid.values.size();
  if (binary) {
    std::vector<unsigned char> buf(n * 4);
    for (std::size_t i = 0; i < n; ++i) {
      float v = grid.valid[i] ? grid.values[i] : fill_value;
      std::uint32_t u = std::bit_cast<std::uint32_t>(v);
      buf[4 * i] = u & 0xff;
      buf[4 * i + 1] = (u >> 8) & 0xff;
      buf[4 * i + 2] = (u >> 16) & 0xff;
      buf[4 * i + 3] = (u >> 24) & 0xff;
    }
    out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
  } else {
    std::ostringstream os;
    os.precision(9);
    for (std::size_t i = 0; i < n; ++i) {
      os << (grid.valid[i] ? grid.values[i] : fill_value);
      os << ((i + 1) % std::size_t(grid.cols) == 0 ? '\n' : ' ');
    }
    out << os.str();
  }
  if (!out) fail(ErrKind::Io, "write failed for " + path);
}

std::string fronts_geojson_string(const std::vector<FrontRecord>& fronts,
                                  const ScalarGrid& grid) {
  using nlohmann::json;
  json features = json::array();
  for (const auto& f : fronts) {
    json coords = json::array();
    for (const auto& p : f.points)
      coords.push_back({grid.lon_of_col(p.col), grid.lat_of_row(p.row)});
    json props;
    props["id"] = f.id;
    props["length_km"] = f.length_km;
    props["width_km"] = f.width_km;
    props["intensity_c_per_km"] = f.intensity_c_per_km;
    if (f.offshore_km) props["offshore_km"] = *f.offshore_km;
    else props["offshore_km"] = nullptr;
    json feat;
    feat["type"] = "Feature";
    feat["geometry"] = {{"type", "LineString"}, {"coordinates", coords}};
    feat["properties"] = props;
    features.push_back(feat);
  }
  json fc;
  fc["type"] = "FeatureCollection";
  fc["features"] = features;
  return fc.dump(2) + "\n";
}

void write_fronts_geojson(const std::vector<FrontRecord>& fronts,
                          const ScalarGrid& grid, const std::string& path) {
  for (const auto& f : fronts)
    if (f.points.empty())
      fail(ErrKind::Argument, "empty front cannot be serialized");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrKind::Io, "cannot write " + path);
  out << fronts_geojson_string(fronts, grid);
  if (!out) fail(ErrKind::Io, "write failed for " + path);
}

}  // namespace frontkit
