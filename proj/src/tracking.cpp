#include "frontkit/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frontkit/errors.hpp"

namespace frontkit {

double front_distance(const FrontRecord& a, const FrontRecord& b) {
  if (a.points.empty() || b.points.empty())
    fail(ErrKind::Argument, "front_distance: empty front");

  const FrontRecord* longer = &a;
  const FrontRecord* shorter = &b;
  if (a.points.size() < b.points.size() ||
      (a.points.size() == b.points.size() && b.points.front() < a.points.front()))
    std::swap(longer, shorter);

  double sum = 0.0;
  for (Pix p : longer->points) {
    double best = std::numeric_limits<double>::infinity();
    for (Pix q : shorter->points) {
      double dr = p.row - q.row, dc = p.col - q.col;
      double d2 = dr * dr + dc * dc;
      if (d2 < best) best = d2;
    }
    sum += std::sqrt(best);
  }
  return sum / double(longer->points.size());
}

void match_day_pair(const FrontSet& prev, FrontSet& next, double length_ratio,
                    int& next_id) {
  for (const auto& fp : prev.fronts) {
    if (fp.id <= 0) fail(ErrKind::Argument, "previous-day front without id");

    // candidates: unassigned fronts passing the point-count ratio gate
    std::size_t best = next.fronts.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < next.fronts.size(); ++q) {
      const auto& fq = next.fronts[q];
      if (fq.id != 0) continue;
      double n = double(fp.points.size());
      double m = double(fq.points.size());
      if (std::min(n, m) / std::max(n, m) < length_ratio) continue;
      double d = front_distance(fp, fq);
      if (d < best_d) {
        best_d = d;
        best = q;
      }
    }
    if (best == next.fronts.size()) continue;  // id dies

    // distance-width decision on the single argmin candidate
    auto& fq = next.fronts[best];
    if (best_d <= (fp.width_px + fq.width_px) / 2.0) fq.id = fp.id;
  }
  for (auto& fq : next.fronts)
    if (fq.id == 0) fq.id = next_id++;
}

double iou(const std::set<int>& a, const std::set<int>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (int x : a)
    if (b.count(x)) ++inter;
  std::size_t uni = a.size() + b.size() - inter;
  return double(inter) / double(uni);
}

TrackSet track_sequence(std::vector<FrontSet>& days, double length_ratio) {
  if (days.empty()) fail(ErrKind::Argument, "track_sequence: no days");

  TrackSet ts;
  for (auto& f : days[0].fronts) f.id = ts.next_id++;

  for (std::size_t d = 1; d < days.size(); ++d) {
    for (auto& f : days[d].fronts) f.id = 0;
    match_day_pair(days[d - 1], days[d], length_ratio, ts.next_id);
  }

  ts.day_ids.resize(days.size());
  for (std::size_t d = 0; d < days.size(); ++d)
    for (const auto& f : days[d].fronts) ts.day_ids[d].push_back(f.id);

  for (const auto& ids : ts.day_ids)
    for (int id : ids) ++ts.lifetimes[id];

  for (std::size_t d = 1; d < days.size(); ++d) {
    std::set<int> a(ts.day_ids[d - 1].begin(), ts.day_ids[d - 1].end());
    std::set<int> b(ts.day_ids[d].begin(), ts.day_ids[d].end());
    ts.iou_series.push_back(iou(a, b));
  }
  return ts;
}

}  // namespace frontkit
