#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frontkit/commands.hpp"
#include "frontkit/errors.hpp"
#include "frontkit/pipeline.hpp"
#include "frontkit/synth.hpp"
#include "test_util.hpp"

using namespace frontkit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SynthSpec step_spec(int rows, int cols, double col, double sigma,
                    std::uint64_t seed) {
  SynthSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.amplitude_c = 2.0;
  spec.half_width_px = 2.0;
  spec.noise_sigma_c = sigma;
  spec.seed = seed;
  spec.curves = {{{0.0, col}, {double(rows - 1), col}}};
  return spec;
}

}  // namespace

TEST_CASE("pipeline: clean synthetic step yields one accurate front") {
  SynthResult syn = synth_field(step_spec(96, 96, 48.0, 0.02, 5));
  Config cfg;
  DetectResult res = run_detect(syn.grid, cfg);
  REQUIRE(res.fronts.fronts.size() == 1);
  TruthScore score = truth_score(res.fronts, syn.truth);
  CHECK(*score.mean_error_px <= 1.5);
  CHECK(score.recall >= 0.9);
  for (const auto& f : res.fronts.fronts) {
    CHECK(f.id >= 1);
    CHECK(f.width_px >= 1.0);
    CHECK(f.intensity_c_per_km >= 0.0);
  }
}

TEST_CASE("pipeline: constant field has no fronts") {
  ScalarGrid g = ScalarGrid::make(32, 32, 18.0f);
  Config cfg;
  DetectResult res = run_detect(g, cfg);
  CHECK(res.fronts.fronts.empty());
  CHECK(res.zone.empty());
}

TEST_CASE("pipeline: gradient baseline skips refinement but fills metrics") {
  SynthResult syn = synth_field(step_spec(96, 96, 48.0, 0.05, 9));
  Config cfg;
  cfg.method = "gradient";
  DetectResult res = run_detect(syn.grid, cfg);
  CHECK(res.fronts.fronts.size() >= 1);
  for (const auto& f : res.fronts.fronts) CHECK(f.length_km > 0.0);
}

TEST_CASE("pipeline: recall does not improve as noise grows") {
  // statistical: mean recall over seeds, 5% slack between sigma levels
  const double sigmas[2] = {0.02, 0.30};
  double recall[2] = {0.0, 0.0};
  const int n_seeds = 20;
  for (int s = 0; s < 2; ++s) {
    for (int seed = 1; seed <= n_seeds; ++seed) {
      SynthResult syn =
          synth_field(step_spec(64, 64, 32.0, sigmas[s], std::uint64_t(seed)));
      Config cfg;
      DetectResult res = run_detect(syn.grid, cfg);
      recall[s] += truth_score(res.fronts, syn.truth).recall;
    }
    recall[s] /= n_seeds;
  }
  CHECK(recall[0] >= recall[1] - 0.05);
}

TEST_CASE("cmd_detect: writes fronts, zone dump and manifest") {
  testutil::TempDir tmp("cmd_detect");
  SynthResult syn = synth_field(step_spec(64, 64, 30.0, 0.02, 3));
  write_fgrid(syn.grid, tmp.str("sst_2024-02-10.fgrid"));

  DetectArgs args;
  args.input = tmp.str("sst_2024-02-10.fgrid");
  args.out_dir = tmp.str("out");
  cmd_detect(args);

  CHECK(fs::exists(tmp.path() / "out" / "fronts.geojson"));
  std::string zone = slurp(tmp.path() / "out" / "zone.txt");
  CHECK(zone.starts_with("ZONE 64 64"));
  std::string manifest = slurp(tmp.path() / "out" / "manifest.txt");
  CHECK(manifest.find("p_hi = 0.1") != std::string::npos);
  CHECK(manifest.find("method = bfdt") != std::string::npos);
  CHECK(manifest.find("sst_2024-02-10.fgrid") != std::string::npos);
}

TEST_CASE("cmd_detect: missing input names the path") {
  DetectArgs args;
  args.input = "/nonexistent/file.fgrid";
  args.out_dir = fs::temp_directory_path() / "frontkit_missing";
  try {
    cmd_detect(args);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/file.fgrid") !=
          std::string::npos);
  }
}

TEST_CASE("cmd_track: same day twice gives IoU 1; one day gives none") {
  testutil::TempDir tmp("cmd_track");
  SynthResult syn = synth_field(step_spec(64, 64, 30.0, 0.02, 3));
  write_fgrid(syn.grid, tmp.str("d_2024-03-01.fgrid"));

  TrackArgs args;
  args.inputs = {tmp.str("d_2024-03-01.fgrid"), tmp.str("d_2024-03-01.fgrid")};
  args.out_dir = tmp.str("two");
  cmd_track(args);
  std::string iou_csv = slurp(tmp.path() / "two" / "iou.csv");
  CHECK(iou_csv == "day_prev,day_next,iou\n0,1,1\n");

  TrackArgs one;
  one.inputs = {tmp.str("d_2024-03-01.fgrid")};
  one.out_dir = tmp.str("one");
  cmd_track(one);
  CHECK(slurp(tmp.path() / "one" / "iou.csv") == "day_prev,day_next,iou\n");
  std::string lifetimes = slurp(tmp.path() / "one" / "lifetimes.csv");
  CHECK(lifetimes == "lifetime_days,count\n1,1\n");
}

TEST_CASE("cmd_track: small shift keeps the id across the pair") {
  testutil::TempDir tmp("cmd_shift");
  SynthResult a = synth_field(step_spec(64, 64, 30.0, 0.02, 3));
  SynthResult b = synth_field(step_spec(64, 64, 31.0, 0.02, 4));
  write_fgrid(a.grid, tmp.str("d_2024-03-01.fgrid"));
  write_fgrid(b.grid, tmp.str("d_2024-03-02.fgrid"));

  TrackArgs args;
  args.inputs = {tmp.str("d_2024-03-01.fgrid"), tmp.str("d_2024-03-02.fgrid")};
  args.out_dir = tmp.str("out");
  cmd_track(args);
  CHECK(slurp(tmp.path() / "out" / "iou.csv") == "day_prev,day_next,iou\n0,1,1\n");
  std::string days = slurp(tmp.path() / "out" / "days.csv");
  CHECK(days.find("2024-03-01") != std::string::npos);
  CHECK(days.find("2024-03-02") != std::string::npos);
}

TEST_CASE("cmd_track twice: byte-identical output trees") {
  testutil::TempDir tmp("determinism");
  for (int i = 0; i < 3; ++i) {
    SynthResult syn =
        synth_field(step_spec(64, 64, 28.0 + i, 0.05, std::uint64_t(i + 1)));
    char name[40];
    std::snprintf(name, sizeof(name), "d_2024-04-%02d.fgrid", i + 1);
    write_fgrid(syn.grid, tmp.str(name));
  }
  TrackArgs args;
  args.inputs = {tmp.str("d_2024-04-01.fgrid"), tmp.str("d_2024-04-02.fgrid"),
                 tmp.str("d_2024-04-03.fgrid")};
  args.out_dir = tmp.str("run1");
  cmd_track(args);
  args.out_dir = tmp.str("run2");
  cmd_track(args);

  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(tmp.path() / "run1"))
    names.push_back(e.path().filename().string());
  CHECK(names.size() >= 6);
  for (const auto& n : names) {
    CHECK(fs::exists(tmp.path() / "run2" / n));
    CHECK(slurp(tmp.path() / "run1" / n) == slurp(tmp.path() / "run2" / n));
  }
}

TEST_CASE("cmd_stats: daily csv and report blocks") {
  testutil::TempDir tmp("cmd_stats");
  for (int i = 0; i < 3; ++i) {
    SynthResult syn =
        synth_field(step_spec(64, 64, 30.0, 0.02, std::uint64_t(i + 7)));
    char name[40];
    std::snprintf(name, sizeof(name), "d_2024-06-%02d.fgrid", i + 1);
    write_fgrid(syn.grid, tmp.str(name));
  }
  TrackArgs track;
  track.inputs = {tmp.str("d_2024-06-01.fgrid"), tmp.str("d_2024-06-02.fgrid"),
                  tmp.str("d_2024-06-03.fgrid")};
  track.out_dir = tmp.str("tracks");
  cmd_track(track);

  StatsArgs stats;
  stats.fronts_dir = tmp.str("tracks");
  stats.out_dir = tmp.str("stats");
  cmd_stats(stats);

  std::string daily = slurp(tmp.path() / "stats" / "daily.csv");
  CHECK(daily.starts_with("date,count,intensity,width_km,length_km,offshore_km\n"));
  CHECK(daily.find("2024-06-01") != std::string::npos);
  std::string report = slurp(tmp.path() / "stats" / "report.csv");
  CHECK(report.find("# seasonal") != std::string::npos);
  CHECK(report.find("JJA,count,") != std::string::npos);
  CHECK(report.find("# spectrum count") != std::string::npos);
  CHECK(report.find("# trend length_km") != std::string::npos);
}

TEST_CASE("cmd_synth + cmd_compare round trip") {
  testutil::TempDir tmp("cmd_synth");
  {
    std::ofstream spec(tmp.str("spec.txt"));
    spec << "n_rows = 64\nn_cols = 64\nbase = 20\namplitude = 2\n"
            "half_width = 2\nnoise_sigma = 0.02\nseed = 11\n"
            "curve = 0,30 63,30\n";
  }
  SynthArgs sy;
  sy.spec_path = tmp.str("spec.txt");
  sy.out_grid = tmp.str("field.fgrid");
  cmd_synth(sy);
  CHECK(fs::exists(tmp.path() / "field.fgrid"));
  CHECK(fs::exists(tmp.path() / "field.fgrid.truth.json"));

  CompareArgs cmp;
  cmp.input = tmp.str("field.fgrid");
  cmp.truth_path = tmp.str("field.fgrid.truth.json");
  cmp.out_dir = tmp.str("cmp");
  cmd_compare(cmp);
  std::string table = slurp(tmp.path() / "cmp" / "compare.csv");
  CHECK(table.starts_with("method,n_fronts,mean_error_px,recall\n"));
  CHECK(table.find("bfdt,") != std::string::npos);
  CHECK(table.find("gradient,") != std::string::npos);
}

TEST_CASE("config file + validation") {
  testutil::TempDir tmp("config");
  {
    std::ofstream f(tmp.str("cfg.txt"));
    f << "# comment\np_hi = 0.05\np_lo = 0.15\ndse_t = 12\nmethod = gradient\n";
  }
  Config cfg = load_config_file(tmp.str("cfg.txt"));
  CHECK(cfg.p_hi == 0.05);
  CHECK(cfg.p_lo == 0.15);
  CHECK(cfg.dse_t == 12.0);
  CHECK(cfg.method == "gradient");
  CHECK(cfg.merge_radius == 3);  // untouched default

  {
    std::ofstream f(tmp.str("bad.txt"));
    f << "p_hi = 0.5\np_lo = 0.2\n";
  }
  CHECK_THROWS_AS(load_config_file(tmp.str("bad.txt")), Error);
  {
    std::ofstream f(tmp.str("unknown.txt"));
    f << "frobnicate = 1\n";
  }
  CHECK_THROWS_AS(load_config_file(tmp.str("unknown.txt")), Error);
}
