#pragma once

#include <string>
#include <vector>

#include "frontkit/config.hpp"
#include "frontkit/grid.hpp"

namespace frontkit {

/// Shared input options: grid format and CSV geometry flags.
struct InputOpts {
  GridFormat format = GridFormat::Fgrid;
  CsvGeometry csv;
};

struct DetectArgs {
  std::string input;
  std::string out_dir;
  Config cfg;
  InputOpts in;
};

struct TrackArgs {
  std::vector<std::string> inputs;  // date order
  std::string out_dir;
  Config cfg;
  InputOpts in;
  int jobs = 0;  // 0 = hardware concurrency
};

struct StatsArgs {
  std::string fronts_dir;  // output tree of `track` (or `detect`)
  std::string out_dir;
};

struct SynthArgs {
  std::string spec_path;
  std::string out_grid;
  std::string out_truth;  // empty -> out_grid + ".truth.json"
};

struct CompareArgs {
  std::string input;
  std::string truth_path;
  std::string out_dir;
  Config cfg;
  InputOpts in;
};

void cmd_detect(const DetectArgs& args);
void cmd_track(const TrackArgs& args);
void cmd_stats(const StatsArgs& args);
void cmd_synth(const SynthArgs& args);
void cmd_compare(const CompareArgs& args);

/// Date tag for a grid file: first yyyy-mm-dd (or yyyymmdd) token in the
/// basename, else the basename without extension.
std::string day_tag_from_path(const std::string& path);

}  // namespace frontkit
