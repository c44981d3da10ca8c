// frontkit command line: detect / track / stats / synth / compare.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frontkit/commands.hpp"
#include "frontkit/errors.hpp"

namespace {

using frontkit::Config;
using frontkit::InputOpts;

struct ConfigFlags {
  std::string config_path;
  CLI::Option *p_hi = nullptr, *p_lo = nullptr, *tol = nullptr, *dse_t = nullptr,
              *radius = nullptr, *min_len = nullptr, *ratio = nullptr,
              *km = nullptr, *method = nullptr;
  Config staged;  // flag values land here before precedence is applied
};

// flag > config file > default
void add_config_flags(CLI::App* cmd, ConfigFlags& cf) {
  cmd->add_option("--config", cf.config_path, "flat key = value config file");
  cf.p_hi = cmd->add_option("--p-hi", cf.staged.p_hi, "upper CDF fraction");
  cf.p_lo = cmd->add_option("--p-lo", cf.staged.p_lo, "lower CDF fraction");
  cf.tol = cmd->add_option("--lde-bd-tol", cf.staged.lde_bd_tol,
                           "lde/bd similarity window");
  cf.dse_t = cmd->add_option("--dse-t", cf.staged.dse_t,
                             "branch pruning area threshold");
  cf.radius = cmd->add_option("--merge-radius", cf.staged.merge_radius,
                              "endpoint merge radius (px)");
  cf.min_len = cmd->add_option("--min-len-px", cf.staged.min_len_px,
                               "minimum front point count");
  cf.ratio = cmd->add_option("--length-ratio", cf.staged.length_ratio,
                             "tracking point-count ratio gate");
  cf.km = cmd->add_option("--km-per-px", cf.staged.km_per_px, "km per grid step");
  cf.method = cmd->add_option("--method", cf.staged.method,
                              "detection method: bfdt | gradient");
}

Config resolve_config(const ConfigFlags& cf) {
  Config cfg;
  if (!cf.config_path.empty()) cfg = frontkit::load_config_file(cf.config_path);
  if (*cf.p_hi) cfg.p_hi = cf.staged.p_hi;
  if (*cf.p_lo) cfg.p_lo = cf.staged.p_lo;
  if (*cf.tol) cfg.lde_bd_tol = cf.staged.lde_bd_tol;
  if (*cf.dse_t) cfg.dse_t = cf.staged.dse_t;
  if (*cf.radius) cfg.merge_radius = cf.staged.merge_radius;
  if (*cf.min_len) cfg.min_len_px = cf.staged.min_len_px;
  if (*cf.ratio) cfg.length_ratio = cf.staged.length_ratio;
  if (*cf.km) cfg.km_per_px = cf.staged.km_per_px;
  if (*cf.method) cfg.method = cf.staged.method;
  cfg.validate();
  return cfg;
}

struct InputFlags {
  std::string format = "fgrid";
  InputOpts opts;
  double fill = 0.0;
  CLI::Option* fill_opt = nullptr;
};

void add_input_flags(CLI::App* cmd, InputFlags& fl) {
  cmd->add_option("--format", fl.format, "input format: fgrid | csv")
      ->check(CLI::IsMember({"fgrid", "csv"}));
  cmd->add_option("--lat0", fl.opts.csv.lat0, "CSV: latitude of row 0");
  cmd->add_option("--lon0", fl.opts.csv.lon0, "CSV: longitude of col 0");
  cmd->add_option("--dlat", fl.opts.csv.dlat, "CSV: degrees per row");
  cmd->add_option("--dlon", fl.opts.csv.dlon, "CSV: degrees per col");
  fl.fill_opt = cmd->add_option("--fill", fl.fill, "CSV: fill value = missing");
}

InputOpts resolve_input(const InputFlags& fl) {
  InputOpts in = fl.opts;
  in.format = fl.format == "csv" ? frontkit::GridFormat::Csv
                                 : frontkit::GridFormat::Fgrid;
  if (*fl.fill_opt) in.csv.fill = float(fl.fill);
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ocean front detection and tracking"};
  app.require_subcommand(1);

  // detect
  auto* detect = app.add_subcommand("detect", "detect fronts in one grid");
  frontkit::DetectArgs da;
  ConfigFlags dcf;
  InputFlags dif;
  detect->add_option("--input", da.input, "grid file")->required();
  detect->add_option("--out", da.out_dir, "output directory")->required();
  add_config_flags(detect, dcf);
  add_input_flags(detect, dif);

  // track
  auto* track = app.add_subcommand("track", "detect and track a day sequence");
  frontkit::TrackArgs ta;
  ConfigFlags tcf;
  InputFlags tif;
  track->add_option("--inputs", ta.inputs, "grid files in date order")
      ->required()
      ->expected(-1);
  track->add_option("--out", ta.out_dir, "output directory")->required();
  track->add_option("--jobs", ta.jobs, "max parallel detection jobs");
  add_config_flags(track, tcf);
  add_input_flags(track, tif);

  // stats
  auto* stats = app.add_subcommand("stats", "aggregate front metrics");
  frontkit::StatsArgs sa;
  stats->add_option("--fronts", sa.fronts_dir, "directory with fronts_*.geojson")
      ->required();
  stats->add_option("--out", sa.out_dir, "output directory")->required();

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic grid");
  frontkit::SynthArgs ya;
  synth->add_option("--spec", ya.spec_path, "synth spec file")->required();
  synth->add_option("--out", ya.out_grid, "output fgrid path")->required();
  synth->add_option("--truth", ya.out_truth,
                    "truth polyline path (default <out>.truth.json)");

  // compare
  auto* compare = app.add_subcommand("compare", "run both methods against truth");
  frontkit::CompareArgs ca;
  ConfigFlags ccf;
  InputFlags cif;
  compare->add_option("--input", ca.input, "grid file")->required();
  compare->add_option("--truth", ca.truth_path, "truth polyline file")->required();
  compare->add_option("--out", ca.out_dir, "output directory")->required();
  add_config_flags(compare, ccf);
  add_input_flags(compare, cif);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (*detect) {
      da.cfg = resolve_config(dcf);
      da.in = resolve_input(dif);
      frontkit::cmd_detect(da);
    } else if (*track) {
      ta.cfg = resolve_config(tcf);
      ta.in = resolve_input(tif);
      frontkit::cmd_track(ta);
    } else if (*stats) {
      frontkit::cmd_stats(sa);
    } else if (*synth) {
      frontkit::cmd_synth(ya);
    } else if (*compare) {
      ca.cfg = resolve_config(ccf);
      ca.in = resolve_input(cif);
      frontkit::cmd_compare(ca);
    }
  } catch (const frontkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
