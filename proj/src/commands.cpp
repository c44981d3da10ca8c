#include "frontkit/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "frontkit/errors.hpp"
#include "frontkit/pipeline.hpp"
#include "frontkit/stats.hpp"
#include "frontkit/tracking.hpp"

namespace fs = std::filesystem;

namespace frontkit {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrKind::Io, "write failed for " + path.string());
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrKind::Io, "cannot create directory " + dir);
}

ScalarGrid load_input(const std::string& path, const InputOpts& in,
                      double km_per_px) {
  if (!fs::exists(path)) fail(ErrKind::Io, "input file not found: " + path);
  ScalarGrid g = read_grid(path, in.format, in.csv);
  g.km_per_px = km_per_px;
  return g;
}

std::string zone_dump(const ZoneMask& zm) {
  std::ostringstream os;
  os << "ZONE " << zm.rows << ' ' << zm.cols << '\n';
  for (int r = 0; r < zm.rows; ++r) {
    for (int c = 0; c < zm.cols; ++c) {
      switch (zm.at(r, c)) {
        case ZoneLabel::Frontal: os << '1'; break;
        case ZoneLabel::NonFrontal: os << '0'; break;
        case ZoneLabel::Undetermined: os << '?'; break;
        case ZoneLabel::Invalid: os << '.'; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string manifest_text(const Config& cfg,
                          const std::vector<std::string>& inputs) {
  std::string m = config_manifest(cfg);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    m += "input_" + std::to_string(i) + " = " + inputs[i] + "\n";
  return m;
}

std::string day_file_name(std::size_t day) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fronts_%03zu.geojson", day);
  return buf;
}

}  // namespace

std::string day_tag_from_path(const std::string& path) {
  std::string base = fs::path(path).stem().string();
  auto digit = [&](std::size_t i) {
    return i < base.size() && base[i] >= '0' && base[i] <= '9';
  };
  // yyyy-mm-dd
  for (std::size_t i = 0; i + 10 <= base.size(); ++i) {
    bool ok = digit(i) && digit(i + 1) && digit(i + 2) && digit(i + 3) &&
              base[i + 4] == '-' && digit(i + 5) && digit(i + 6) &&
              base[i + 7] == '-' && digit(i + 8) && digit(i + 9);
    if (ok) return base.substr(i, 10);
  }
  // yyyymmdd -> normalized
  for (std::size_t i = 0; i + 8 <= base.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < 8; ++j) ok = ok && digit(i + j);
    if (ok && !digit(i + 8) && (i == 0 || !digit(i - 1))) {
      std::string d = base.substr(i, 8);
      return d.substr(0, 4) + "-" + d.substr(4, 2) + "-" + d.substr(6, 2);
    }
  }
  return base;
}

void cmd_detect(const DetectArgs& args) {
  args.cfg.validate();
  ensure_dir(args.out_dir);
  ScalarGrid grid = load_input(args.input, args.in, args.cfg.km_per_px);
  DetectResult res = run_detect(grid, args.cfg);
  res.fronts.day = day_tag_from_path(args.input);

  fs::path out(args.out_dir);
  write_fronts_geojson(res.fronts.fronts, grid, (out / "fronts.geojson").string());
  write_text(out / "zone.txt", zone_dump(res.mask));
  write_text(out / "manifest.txt", manifest_text(args.cfg, {args.input}));
}

void cmd_track(const TrackArgs& args) {
  args.cfg.validate();
  if (args.inputs.empty()) fail(ErrKind::Argument, "track: no input files");
  ensure_dir(args.out_dir);

  const std::size_t n = args.inputs.size();
  std::vector<ScalarGrid> grids(n);
  std::vector<DetectResult> results(n);
  std::vector<std::string> errors(n);

  unsigned jobs = args.jobs > 0 ? unsigned(args.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, unsigned(n));

  std::vector<std::thread> workers;
  std::atomic<std::size_t> cursor{0};
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      while (true) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= n) return;
        try {
          grids[i] = load_input(args.inputs[i], args.in, args.cfg.km_per_px);
          results[i] = run_detect(grids[i], args.cfg);
          results[i].fronts.day = day_tag_from_path(args.inputs[i]);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    });
  for (auto& w : workers) w.join();
  for (std::size_t i = 0; i < n; ++i)
    if (!errors[i].empty())
      fail(ErrKind::Io, args.inputs[i] + ": " + errors[i]);

  std::vector<FrontSet> days;
  days.reserve(n);
  for (auto& r : results) days.push_back(std::move(r.fronts));
  TrackSet ts = track_sequence(days, args.cfg.length_ratio);

  fs::path out(args.out_dir);
  for (std::size_t d = 0; d < n; ++d)
    write_fronts_geojson(days[d].fronts, grids[d],
                         (out / day_file_name(d)).string());

  {  // tracks.json: id -> (day, front index) appearances
    using nlohmann::json;
    std::map<int, json> per_id;
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t fi = 0; fi < days[d].fronts.size(); ++fi) {
        int id = days[d].fronts[fi].id;
        per_id[id].push_back({d, fi});
      }
    json tracks = json::array();
    for (auto& [id, entries] : per_id)
      tracks.push_back({{"id", id},
                        {"lifetime", ts.lifetimes.at(id)},
                        {"entries", entries}});
    json root;
    root["days"] = n;
    root["tracks"] = tracks;
    write_text(out / "tracks.json", root.dump(2) + "\n");
  }
  {
    std::ostringstream os;
    os << "day_prev,day_next,iou\n";
    for (std::size_t i = 0; i < ts.iou_series.size(); ++i)
      os << i << ',' << i + 1 << ',' << fmt(ts.iou_series[i]) << '\n';
    write_text(out / "iou.csv", os.str());
  }
  {
    std::map<int, int> hist;  // lifetime -> number of ids
    for (const auto& [id, life] : ts.lifetimes) ++hist[life];
    std::ostringstream os;
    os << "lifetime_days,count\n";
    for (const auto& [life, cnt] : hist) os << life << ',' << cnt << '\n';
    write_text(out / "lifetimes.csv", os.str());
  }
  {
    std::ostringstream os;
    os << "day,date,source\n";
    for (std::size_t d = 0; d < n; ++d)
      os << d << ',' << days[d].day << ',' << args.inputs[d] << '\n';
    write_text(out / "days.csv", os.str());
  }
  write_text(out / "manifest.txt", manifest_text(args.cfg, args.inputs));
}

namespace {

FrontSet front_set_from_geojson(const fs::path& path, const std::string& day) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::Io, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrKind::Format, path.string() + ": " + e.what());
  }
  FrontSet set;
  set.day = day;
  for (const auto& feat : j.value("features", nlohmann::json::array())) {
    FrontRecord f;
    const auto& props = feat.at("properties");
    f.id = props.value("id", 0);
    f.length_km = props.value("length_km", 0.0);
    f.width_km = props.value("width_km", 0.0);
    f.intensity_c_per_km = props.value("intensity_c_per_km", 0.0);
    if (props.contains("offshore_km") && !props["offshore_km"].is_null())
      f.offshore_km = props["offshore_km"].get<double>();
    set.fronts.push_back(std::move(f));
  }
  return set;
}

void append_series_reports(std::ostringstream& os, const std::string& name,
                           const std::vector<std::optional<double>>& series) {
  os << "# spectrum " << name << "\nfrequency,power\n";
  if (series.size() >= 2 &&
      std::any_of(series.begin(), series.end(), [](auto& v) { return bool(v); })) {
    for (auto [f, p] : periodogram(series)) os << fmt(f) << ',' << fmt(p) << '\n';
  }
  std::vector<std::pair<double, double>> xy;
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i]) xy.emplace_back(double(i), *series[i]);
  os << "# trend " << name << "\nslope,intercept\n";
  if (xy.size() >= 2) {
    auto [slope, icept] = linear_trend(xy);
    os << fmt(slope) << ',' << fmt(icept) << '\n';
  }
}

}  // namespace

void cmd_stats(const StatsArgs& args) {
  fs::path dir(args.fronts_dir);
  if (!fs::exists(dir)) fail(ErrKind::Io, "fronts directory not found: " + args.fronts_dir);
  ensure_dir(args.out_dir);

  // day index written by `track`; fall back to sorted fronts_*.geojson
  std::vector<std::pair<std::string, std::string>> day_files;  // (date, file)
  if (fs::exists(dir / "days.csv")) {
    std::ifstream in(dir / "days.csv");
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string day, date, source;
      std::getline(ls, day, ',');
      std::getline(ls, date, ',');
      std::getline(ls, source);
      day_files.emplace_back(date, day_file_name(std::size_t(std::stoul(day))));
    }
  } else {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir)) {
      std::string name = e.path().filename().string();
      if (name.starts_with("fronts_") && name.ends_with(".geojson"))
        names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    for (const auto& n : names) day_files.emplace_back(day_tag_from_path(n), n);
  }
  if (day_files.empty()) fail(ErrKind::Io, "no front files in " + args.fronts_dir);

  std::vector<DailySummary> daily;
  for (const auto& [date, file] : day_files)
    daily.push_back(daily_summary(front_set_from_geojson(dir / file, date)));

  fs::path out(args.out_dir);
  {
    std::ostringstream os;
    os << "date,count,intensity,width_km,length_km,offshore_km\n";
    for (const auto& d : daily)
      os << d.date << ',' << d.count << ',' << fmt_opt(d.intensity_c_per_km)
         << ',' << fmt_opt(d.width_km) << ',' << fmt_opt(d.length_km) << ','
         << fmt_opt(d.offshore_km) << '\n';
    write_text(out / "daily.csv", os.str());
  }
  {
    std::ostringstream os;
    os << "# seasonal\nseason,metric,mean,stddev,n\n";
    for (const auto& s : seasonal_aggregate(daily)) {
      auto row = [&](const char* metric, const MeanStd& ms) {
        os << s.season << ',' << metric << ',' << fmt(ms.mean) << ','
           << fmt(ms.stddev) << ',' << ms.n << '\n';
      };
      row("count", s.count);
      row("intensity", s.intensity);
      row("width_km", s.width_km);
      row("length_km", s.length_km);
      row("offshore_km", s.offshore_km);
    }
    auto series_of = [&](auto&& get) {
      std::vector<std::optional<double>> v;
      for (const auto& d : daily) v.push_back(get(d));
      return v;
    };
    append_series_reports(os, "count", series_of([](const DailySummary& d) {
                            return std::optional<double>(double(d.count));
                          }));
    append_series_reports(os, "intensity", series_of([](const DailySummary& d) {
                            return d.intensity_c_per_km;
                          }));
    append_series_reports(os, "width_km", series_of([](const DailySummary& d) {
                            return d.width_km;
                          }));
    append_series_reports(os, "length_km", series_of([](const DailySummary& d) {
                            return d.length_km;
                          }));
    write_text(out / "report.csv", os.str());
  }
}

void cmd_synth(const SynthArgs& args) {
  SynthSpec spec = load_synth_spec(args.spec_path);
  SynthResult res = synth_field(spec);

  fs::path out(args.out_grid);
  if (out.has_parent_path()) ensure_dir(out.parent_path().string());
  write_fgrid(res.grid, args.out_grid);

  std::string truth_path =
      args.out_truth.empty() ? args.out_grid + ".truth.json" : args.out_truth;
  nlohmann::json j;
  j["curves"] = nlohmann::json::array();
  for (const auto& curve : res.truth) {
    nlohmann::json pts = nlohmann::json::array();
    for (auto [r, c] : curve) pts.push_back({r, c});
    j["curves"].push_back(pts);
  }
  write_text(truth_path, j.dump(2) + "\n");
}

void cmd_compare(const CompareArgs& args) {
  args.cfg.validate();
  ensure_dir(args.out_dir);
  ScalarGrid grid = load_input(args.input, args.in, args.cfg.km_per_px);

  std::vector<Curve> truth;
  {
    std::ifstream in(args.truth_path);
    if (!in) fail(ErrKind::Io, "cannot open " + args.truth_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      fail(ErrKind::Format, args.truth_path + ": " + e.what());
    }
    for (const auto& curve : j.at("curves")) {
      Curve c;
      for (const auto& pt : curve)
        c.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
      truth.push_back(std::move(c));
    }
  }

  fs::path out(args.out_dir);
  std::ostringstream os;
  os << "method,n_fronts,mean_error_px,recall\n";
  for (const std::string& method : {std::string("bfdt"), std::string("gradient")}) {
    Config cfg = args.cfg;
    cfg.method = method;
    DetectResult res = run_detect(grid, cfg);
    TruthScore score = truth_score(res.fronts, truth);
    write_fronts_geojson(res.fronts.fronts, grid,
                         (out / ("fronts_" + method + ".geojson")).string());
    os << method << ',' << res.fronts.fronts.size() << ','
       << fmt_opt(score.mean_error_px) << ',' << fmt(score.recall) << '\n';
  }
  write_text(out / "compare.csv", os.str());
  write_text(out / "manifest.txt", manifest_text(args.cfg, {args.input}));
}

}  // namespace frontkit
