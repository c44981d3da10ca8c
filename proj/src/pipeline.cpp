#include "frontkit/pipeline.hpp"

#include <algorithm>

#include "frontkit/errors.hpp"

namespace frontkit {

namespace {

BitMask frontal_bits(const ZoneMask& zm) {
  BitMask z(zm.rows, zm.cols);
  for (std::size_t i = 0; i < zm.labels.size(); ++i)
    z.bits[i] = zm.labels[i] == ZoneLabel::Frontal ? 1 : 0;
  return z;
}

void drop_short(FrontSet& fs, int min_len_px) {
  std::erase_if(fs.fronts, [min_len_px](const FrontRecord& f) {
    return int(f.points.size()) < min_len_px;
  });
}

}  // namespace

DetectResult run_detect(const ScalarGrid& grid, const Config& cfg) {
  cfg.validate();

  DetectResult res;
  res.field = sobel_gradient(grid);
  Thresholds th = thresholds_from_cdf(res.field, cfg.p_hi, cfg.p_lo);

  if (cfg.method == "bfdt") {
    res.mask = resolve_zone(grid, res.field, th, cfg.lde_bd_tol);
    res.zone = frontal_bits(res.mask);
    res.skeleton = dse_trim(mdm_skeleton(res.zone), res.zone, cfg.dse_t);
    // MDM breaks at zone-width changes; keep every traceable fragment so
    // merging can stitch the pieces, and apply the length filter once the
    // geometry is final
    int floor_px = std::min(5, cfg.min_len_px);
    res.fronts = vectorize(res.skeleton, floor_px);
    res.fronts = merge_and_fill(std::move(res.fronts), cfg.merge_radius, res.field);
    res.fronts = delete_rings(std::move(res.fronts));
    drop_short(res.fronts, cfg.min_len_px);

    // gap filling may step just outside the zone; metrics measure against
    // the zone plus the fronts' own pixels so the contract holds
    BitMask zm = res.zone;
    for (const auto& f : res.fronts.fronts)
      for (Pix p : f.points) zm.set(p.row, p.col, true);
    compute_metrics(res.fronts, zm, res.field, grid);
  } else {
    res.mask = hysteresis_zone(res.field, th);
    res.zone = frontal_bits(res.mask);
    res.skeleton = mdm_skeleton(res.zone);
    res.fronts = vectorize(res.skeleton, cfg.min_len_px);
    compute_metrics(res.fronts, res.zone, res.field, grid);
  }

  int id = 1;
  for (auto& f : res.fronts.fronts) f.id = id++;
  return res;
}

}  // namespace frontkit
