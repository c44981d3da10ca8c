#include "frontkit/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "frontkit/errors.hpp"

namespace frontkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_number(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    fail(ErrKind::Format, "bad numeric value '" + v + "' for key '" + key + "'");
  }
}

// flat `key = value` file; returns pairs in file order (keys may repeat)
std::vector<std::pair<std::string, std::string>> read_kv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::Io, "cannot open " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      fail(ErrKind::Format,
           path + ": line " + std::to_string(n) + ": expected 'key = value'");
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace

void Config::validate() const {
  if (!(p_hi > 0.0 && p_hi <= p_lo && p_lo < 1.0))
    fail(ErrKind::Argument, "config: need 0 < p_hi <= p_lo < 1");
  if (lde_bd_tol <= 0.0) fail(ErrKind::Argument, "config: lde_bd_tol must be positive");
  if (merge_radius < 0) fail(ErrKind::Argument, "config: merge_radius must be >= 0");
  if (min_len_px < 1) fail(ErrKind::Argument, "config: min_len_px must be >= 1");
  if (!(length_ratio > 0.0 && length_ratio <= 1.0))
    fail(ErrKind::Argument, "config: length_ratio must be in (0, 1]");
  if (km_per_px <= 0.0) fail(ErrKind::Argument, "config: km_per_px must be positive");
  if (method != "bfdt" && method != "gradient")
    fail(ErrKind::Argument, "config: method must be 'bfdt' or 'gradient'");
}

Config load_config_file(const std::string& path, Config base) {
  for (const auto& [key, value] : read_kv(path)) {
    if (key == "p_hi") base.p_hi = to_number(value, key);
    else if (key == "p_lo") base.p_lo = to_number(value, key);
    else if (key == "lde_bd_tol") base.lde_bd_tol = to_number(value, key);
    else if (key == "dse_t") base.dse_t = to_number(value, key);
    else if (key == "merge_radius") base.merge_radius = int(to_number(value, key));
    else if (key == "min_len_px") base.min_len_px = int(to_number(value, key));
    else if (key == "length_ratio") base.length_ratio = to_number(value, key);
    else if (key == "km_per_px") base.km_per_px = to_number(value, key);
    else if (key == "method") base.method = value;
    else fail(ErrKind::Format, path + ": unknown config key '" + key + "'");
  }
  base.validate();
  return base;
}

std::string config_manifest(const Config& cfg) {
  std::ostringstream os;
  os << "dse_t = " << fmt(cfg.dse_t) << '\n'
     << "km_per_px = " << fmt(cfg.km_per_px) << '\n'
     << "lde_bd_tol = " << fmt(cfg.lde_bd_tol) << '\n'
     << "length_ratio = " << fmt(cfg.length_ratio) << '\n'
     << "merge_radius = " << cfg.merge_radius << '\n'
     << "method = " << cfg.method << '\n'
     << "min_len_px = " << cfg.min_len_px << '\n'
     << "p_hi = " << fmt(cfg.p_hi) << '\n'
     << "p_lo = " << fmt(cfg.p_lo) << '\n';
  return os.str();
}

SynthSpec load_synth_spec(const std::string& path) {
  SynthSpec spec;
  for (const auto& [key, value] : read_kv(path)) {
    if (key == "n_rows") spec.rows = int(to_number(value, key));
    else if (key == "n_cols") spec.cols = int(to_number(value, key));
    else if (key == "base") spec.base_c = to_number(value, key);
    else if (key == "amplitude") spec.amplitude_c = to_number(value, key);
    else if (key == "half_width") spec.half_width_px = to_number(value, key);
    else if (key == "noise_sigma") spec.noise_sigma_c = to_number(value, key);
    else if (key == "seed") spec.seed = std::uint64_t(to_number(value, key));
    else if (key == "curve") {
      Curve curve;
      std::istringstream ls(value);
      std::string tok;
      while (ls >> tok) {
        std::size_t comma = tok.find(',');
        if (comma == std::string::npos)
          fail(ErrKind::Format, path + ": curve point '" + tok + "' is not 'row,col'");
        curve.emplace_back(to_number(tok.substr(0, comma), key),
                           to_number(tok.substr(comma + 1), key));
      }
      if (curve.empty())
        fail(ErrKind::Format, path + ": empty curve line");
      spec.curves.push_back(std::move(curve));
    } else {
      fail(ErrKind::Format, path + ": unknown synth key '" + key + "'");
    }
  }
  return spec;
}

}  // namespace frontkit
