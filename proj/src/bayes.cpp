#include "frontkit/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "frontkit/errors.hpp"

namespace frontkit {

std::size_t ZoneMask::count(ZoneLabel l) const {
  return std::size_t(std::count(labels.begin(), labels.end(), l));
}

Thresholds thresholds_from_cdf(const GradientField& field, double p_hi,
                               double p_lo) {
  if (!(p_hi > 0.0 && p_hi <= p_lo && p_lo < 1.0))
    fail(ErrKind::Argument, "need 0 < p_hi <= p_lo < 1");

  std::vector<double> mags;
  mags.reserve(field.mag.size());
  for (std::size_t i = 0; i < field.mag.size(); ++i)
    if (field.valid[i]) mags.push_back(field.mag[i]);
  if (mags.empty()) fail(ErrKind::Argument, "gradient field has no valid cells");

  std::sort(mags.begin(), mags.end(), std::greater<>());
  const auto n = mags.size();
  auto rank = [n](double p) {
    auto k = std::size_t(std::ceil(p * double(n)));
    if (k < 1) k = 1;
    if (k > n) k = n;
    return k;
  };
  Thresholds th;
  th.p_hi = p_hi;
  th.p_lo = p_lo;
  th.upper = mags[rank(p_hi) - 1];
  th.lower = mags[rank(p_lo) - 1];
  return th;
}

ZoneMask classify_three_way(const GradientField& field, const Thresholds& th) {
  ZoneMask zm;
  zm.rows = field.rows;
  zm.cols = field.cols;
  zm.labels.assign(field.mag.size(), ZoneLabel::Invalid);
  for (std::size_t i = 0; i < field.mag.size(); ++i) {
    if (!field.valid[i]) continue;
    double m = field.mag[i];
    if (m > th.upper) zm.labels[i] = ZoneLabel::Frontal;
    else if (m < th.lower) zm.labels[i] = ZoneLabel::NonFrontal;
    else zm.labels[i] = ZoneLabel::Undetermined;
  }
  return zm;
}

std::pair<double, double> prior(double t_e, const Thresholds& th) {
  if (!(th.upper > th.lower))
    fail(ErrKind::Argument, "degenerate thresholds: upper == lower");
  if (t_e < th.lower || t_e > th.upper)
    fail(ErrKind::Argument, "magnitude outside [lower, upper]");
  double p_front = (t_e - th.lower) / (th.upper - th.lower);
  return {p_front, 1.0 - p_front};
}

NeighborStats lde_bd(const std::array<double, 8>& v) {
  double vmax = v[0], vmin = v[0], sum = v[0];
  for (int i = 1; i < 8; ++i) {
    vmax = std::max(vmax, v[i]);
    vmin = std::min(vmin, v[i]);
    sum += v[i];
  }
  if (vmax == vmin) return {0.5, 0.0};  // flat: no edge evidence
  const double range = vmax - vmin;
  const double vbar = sum / 8.0;

  // diametric pairs (A,I), (B,H), (C,G), (D,F)
  constexpr int pa[4] = {0, 1, 2, 3};
  constexpr int pb[4] = {7, 6, 5, 4};
  double lde_sum = 0.0, bd_sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    double d = std::fabs(v[pa[k]] - v[pb[k]]);
    lde_sum += (4.0 / 7.0) * ((vmax - vbar - d) / range) + 0.5;
    bd_sum += d / range;
  }
  return {lde_sum / 4.0, bd_sum / 4.0};
}

std::pair<double, double> likelihood(double mag_e, const NeighborStats& e,
                                     const std::vector<double>& mags,
                                     const std::vector<NeighborStats>& stats,
                                     double tol) {
  std::size_t f_n = 0, f_lde = 0, f_bd = 0;
  std::size_t nf_n = 0, nf_lde = 0, nf_bd = 0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (mags[i] > mag_e) {
      ++f_n;
      if (std::fabs(stats[i].lde - e.lde) < tol) ++f_lde;
      if (std::fabs(stats[i].bd - e.bd) < tol) ++f_bd;
    } else if (mags[i] < mag_e) {
      ++nf_n;
      if (std::fabs(stats[i].lde - e.lde) < tol) ++nf_lde;
      if (std::fabs(stats[i].bd - e.bd) < tol) ++nf_bd;
    }
  }
  double l_front = f_n == 0 ? 1.0
                            : (double(f_lde) / double(f_n)) *
                                  (double(f_bd) / double(f_n));
  double l_non = nf_n == 0 ? 1.0
                           : (double(nf_lde) / double(nf_n)) *
                                 (double(nf_bd) / double(nf_n));
  return {l_front, l_non};
}

bool bayes_decide(const std::pair<double, double>& pri,
                  const std::pair<double, double>& like) {
  return like.first * pri.first >= like.second * pri.second;
}

namespace {

NeighborStats cell_stats(const ScalarGrid& grid, int r, int c) {
  std::array<double, 8> v{};
  int k = 0;
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      v[k++] = double(grid.at(r + dr, c + dc));
    }
  return lde_bd(v);
}

}  // namespace

ZoneMask resolve_zone(const ScalarGrid& grid, const GradientField& field,
                      const Thresholds& th, double tol) {
  ZoneMask zm = classify_three_way(field, th);

  // A flat CDF carries no frontal evidence at all.
  if (th.upper == th.lower) {
    for (auto& l : zm.labels)
      if (l != ZoneLabel::Invalid) l = ZoneLabel::NonFrontal;
    return zm;
  }

  // population stats over every valid cell
  std::vector<double> mags;
  std::vector<NeighborStats> stats;
  mags.reserve(field.mag.size());
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c) {
      std::size_t i = field.idx(r, c);
      if (!field.valid[i]) continue;
      mags.push_back(field.mag[i]);
      stats.push_back(cell_stats(grid, r, c));
    }

  std::size_t vi = 0;  // index into the packed valid-cell arrays
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c) {
      std::size_t i = field.idx(r, c);
      if (!field.valid[i]) continue;
      std::size_t me = vi++;
      if (zm.labels[i] != ZoneLabel::Undetermined) continue;
      auto pri = prior(field.mag[i], th);
      auto like = likelihood(mags[me], stats[me], mags, stats, tol);
      zm.labels[i] =
          bayes_decide(pri, like) ? ZoneLabel::Frontal : ZoneLabel::NonFrontal;
    }
  return zm;
}

ZoneMask detect_frontal_zone(const ScalarGrid& grid, const BayesConfig& cfg) {
  GradientField field = sobel_gradient(grid);
  Thresholds th = thresholds_from_cdf(field, cfg.p_hi, cfg.p_lo);
  return resolve_zone(grid, field, th, cfg.tol);
}

ZoneMask hysteresis_zone(const GradientField& field, const Thresholds& th) {
  ZoneMask zm = classify_three_way(field, th);
  std::deque<Pix> queue;
  for (int r = 0; r < zm.rows; ++r)
    for (int c = 0; c < zm.cols; ++c)
      if (zm.at(r, c) == ZoneLabel::Frontal) queue.push_back({r, c});

  while (!queue.empty()) {
    Pix p = queue.front();
    queue.pop_front();
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        int r = p.row + dr, c = p.col + dc;
        if (r < 0 || r >= zm.rows || c < 0 || c >= zm.cols) continue;
        std::size_t i = zm.idx(r, c);
        if (zm.labels[i] == ZoneLabel::Undetermined) {
          zm.labels[i] = ZoneLabel::Frontal;
          queue.push_back({r, c});
        }
      }
  }
  for (auto& l : zm.labels)
    if (l == ZoneLabel::Undetermined) l = ZoneLabel::NonFrontal;
  return zm;
}

}  // namespace frontkit
