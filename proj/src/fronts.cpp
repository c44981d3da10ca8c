#include "frontkit/fronts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "frontkit/edt.hpp"
#include "frontkit/errors.hpp"

namespace frontkit {

namespace {

constexpr int kN8r[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kN8c[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

}  // namespace

namespace {

// turn penalty between unit steps, 0 (straight) .. 4 (reversal)
int turn_cost(int dr0, int dc0, int dr1, int dc1) {
  auto octant = [](int dr, int dc) {
    static const int table[3][3] = {{7, 0, 1}, {6, -1, 2}, {5, 4, 3}};
    return table[dr + 1][dc + 1];
  };
  int a = octant(dr0, dc0), b = octant(dr1, dc1);
  int d = std::abs(a - b) % 8;
  return std::min(d, 8 - d);
}

}  // namespace

FrontSet vectorize(const BitMask& skeleton, int min_len_px) {
  const int rows = skeleton.rows, cols = skeleton.cols;

  std::vector<std::uint8_t> seen(skeleton.bits.size(), 0);
  auto unvisited = [&](Pix p) {
    return skeleton.in_bounds(p.row, p.col) && skeleton.at(p.row, p.col) &&
           !seen[skeleton.idx(p.row, p.col)];
  };
  auto udeg = [&](Pix p) {
    int d = 0;
    for (int k = 0; k < 8; ++k)
      if (unvisited({p.row + kN8r[k], p.col + kN8c[k]})) ++d;
    return d;
  };

  FrontSet fs;
  for (int r0 = 0; r0 < rows; ++r0)
    for (int c0 = 0; c0 < cols; ++c0) {
      if (!unvisited({r0, c0})) continue;

      // gather the still-unvisited component
      std::vector<Pix> comp;
      std::vector<Pix> stack{{r0, c0}};
      std::set<Pix> in_comp{{r0, c0}};
      while (!stack.empty()) {
        Pix p = stack.back();
        stack.pop_back();
        comp.push_back(p);
        for (int k = 0; k < 8; ++k) {
          Pix n{p.row + kN8r[k], p.col + kN8c[k]};
          if (unvisited(n) && in_comp.insert(n).second) stack.push_back(n);
        }
      }

      // start at the lex-smallest free end; cycles start anywhere
      Pix head = comp.front();
      bool have_end = false;
      for (Pix p : comp) {
        if (udeg(p) > 1) continue;
        if (!have_end || p < head) head = p;
        have_end = true;
      }
      if (!have_end) head = *std::min_element(comp.begin(), comp.end());

      // walk, consuming pixels; junctions continue along the straightest
      // unvisited neighbor so main lines pass through their own spurs.
      // A near-reversal (135 degrees or more) ends the trace instead of
      // folding the path back onto itself.
      auto adj = [](Pix a, Pix b) { return chebyshev(a, b) == 1; };

      // MDM leaves 2-px-wide runs where the zone width is even; pixels
      // wedged between two consecutive path pixels are consumed silently
      // when everything around them is reachable from the step itself
      auto absorb_twins = [&](Pix cur, Pix next) {
        for (int k = 0; k < 8; ++k) {
          Pix t{next.row + kN8r[k], next.col + kN8c[k]};
          if (!unvisited(t) || !adj(t, cur) || !adj(t, next)) continue;
          bool redundant = true;
          for (int j = 0; j < 8 && redundant; ++j) {
            Pix u{t.row + kN8r[j], t.col + kN8c[j]};
            if (!unvisited(u) || u == next) continue;
            redundant = adj(u, cur) || adj(u, next);
          }
          if (redundant) seen[skeleton.idx(t.row, t.col)] = 1;
        }
      };

      std::vector<Pix> path{head};
      seen[skeleton.idx(head.row, head.col)] = 1;
      Pix cur = head;
      int dr0 = 0, dc0 = 0;
      int prev_cost = 0;
      while (true) {
        Pix next{-1, -1};
        int best_cost = 99;
        for (int k = 0; k < 8; ++k) {
          Pix n{cur.row + kN8r[k], cur.col + kN8c[k]};
          if (!unvisited(n)) continue;
          int cost = (dr0 == 0 && dc0 == 0)
                         ? 0
                         : turn_cost(dr0, dc0, kN8r[k], kN8c[k]);
          if (cost < best_cost || (cost == best_cost && n < next)) {
            best_cost = cost;
            next = n;
          }
        }
        // a right-angle turn is allowed only as an isolated wiggle;
        // anything sharper, or consecutive right angles, ends the trace
        if (best_cost >= 3 || (best_cost == 2 && prev_cost >= 2)) break;
        if (best_cost == 99) break;
        prev_cost = best_cost;
        dr0 = next.row - cur.row;
        dc0 = next.col - cur.col;
        seen[skeleton.idx(next.row, next.col)] = 1;
        absorb_twins(cur, next);
        path.push_back(next);
        cur = next;
      }

      if (int(path.size()) >= min_len_px) {
        FrontRecord fr;
        fr.points = std::move(path);
        fs.fronts.push_back(std::move(fr));
      }
    }
  return fs;
}

namespace {

double circular_diff(double a, double b) {
  double d = std::fabs(a - b);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  d = std::fmod(d, two_pi);
  return std::min(d, two_pi - d);
}

// circular mean of gradient direction over the 3 pixels at one end
double end_direction(const FrontRecord& f, bool at_head,
                     const GradientField& field) {
  double sx = 0.0, sy = 0.0;
  int n = std::min<std::size_t>(3, f.points.size());
  for (int i = 0; i < n; ++i) {
    Pix p = at_head ? f.points[i] : f.points[f.points.size() - 1 - i];
    if (p.row < 0 || p.row >= field.rows || p.col < 0 || p.col >= field.cols)
      continue;
    if (!field.is_valid(p.row, p.col)) continue;
    double d = field.dir[field.idx(p.row, p.col)];
    sx += std::cos(d);
    sy += std::sin(d);
  }
  if (sx == 0.0 && sy == 0.0) return 0.0;
  return std::atan2(sy, sx);
}

// exclusive gap fill, stepping diagonally whenever both coordinates differ
std::vector<Pix> fill_gap(Pix a, Pix b) {
  std::vector<Pix> out;
  Pix p = a;
  while (!(p == b)) {
    int dr = b.row > p.row ? 1 : (b.row < p.row ? -1 : 0);
    int dc = b.col > p.col ? 1 : (b.col < p.col ? -1 : 0);
    p = {p.row + dr, p.col + dc};
    if (p == b) break;
    out.push_back(p);
  }
  return out;
}

struct MergeCand {
  double dist = 0.0;
  double dir_diff = 0.0;
  std::size_t other = 0;
  bool p_at_tail = false;  // joining end of the scanning front
  bool q_at_head = false;  // joining end of the other front
};

}  // namespace

FrontSet merge_and_fill(FrontSet fs, int radius, const GradientField& field) {
  auto endpoint = [](const FrontRecord& f, bool tail) {
    return tail ? f.tail() : f.head();
  };

  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t p = 0; p < fs.fronts.size() && !merged; ++p) {
      std::vector<MergeCand> cands;
      for (std::size_t q = 0; q < fs.fronts.size(); ++q) {
        if (q == p) continue;
        for (bool pt : {false, true})
          for (bool qh : {false, true}) {
            Pix a = endpoint(fs.fronts[p], pt);
            Pix b = endpoint(fs.fronts[q], !qh);  // qh true = join at q's head
            if (chebyshev(a, b) > radius) continue;
            MergeCand mc;
            double dr = a.row - b.row, dc = a.col - b.col;
            mc.dist = std::sqrt(dr * dr + dc * dc);
            mc.dir_diff = circular_diff(end_direction(fs.fronts[p], !pt, field),
                                        end_direction(fs.fronts[q], qh, field));
            mc.other = q;
            mc.p_at_tail = pt;
            mc.q_at_head = qh;
            cands.push_back(mc);
          }
      }
      std::sort(cands.begin(), cands.end(), [](const MergeCand& x, const MergeCand& y) {
        if (x.dist != y.dist) return x.dist < y.dist;
        if (x.dir_diff != y.dir_diff) return x.dir_diff < y.dir_diff;
        if (x.other != y.other) return x.other < y.other;
        if (x.p_at_tail != y.p_at_tail) return x.p_at_tail < y.p_at_tail;
        return x.q_at_head < y.q_at_head;
      });

      for (const MergeCand& mc : cands) {
        const FrontRecord& fp = fs.fronts[p];
        const FrontRecord& fq = fs.fronts[mc.other];

        std::vector<Pix> part1 = fp.points;
        if (!mc.p_at_tail) std::reverse(part1.begin(), part1.end());
        std::vector<Pix> part2 = fq.points;
        if (!mc.q_at_head) std::reverse(part2.begin(), part2.end());
        std::vector<Pix> gap = fill_gap(part1.back(), part2.front());

        // a merge may not duplicate a pixel, in this front or any other
        std::set<Pix> used;
        bool ok = true;
        for (const auto& part : {part1, gap, part2})
          for (Pix x : part)
            if (!used.insert(x).second) { ok = false; break; }
        if (ok)
          for (std::size_t r = 0; r < fs.fronts.size() && ok; ++r) {
            if (r == p || r == mc.other) continue;
            for (Pix x : gap)
              if (std::find(fs.fronts[r].points.begin(), fs.fronts[r].points.end(),
                            x) != fs.fronts[r].points.end()) {
                ok = false;
                break;
              }
          }
        if (!ok) continue;

        FrontRecord nf;
        nf.points = std::move(part1);
        nf.points.insert(nf.points.end(), gap.begin(), gap.end());
        nf.points.insert(nf.points.end(), part2.begin(), part2.end());
        std::size_t lo = std::min(p, mc.other), hi = std::max(p, mc.other);
        fs.fronts[lo] = std::move(nf);
        fs.fronts.erase(fs.fronts.begin() + std::ptrdiff_t(hi));
        merged = true;  // restart the scan
        break;
      }
    }
  }
  return fs;
}

FrontSet delete_rings(FrontSet fs) {
  bool changed = true;
  while (changed) {
    changed = false;

    // whole rings: head inside the tail's 3x3 region
    for (std::size_t i = 0; i < fs.fronts.size(); ++i) {
      const auto& pts = fs.fronts[i].points;
      if (pts.empty()) continue;
      if (chebyshev(pts.front(), pts.back()) <= 1) {
        fs.fronts.erase(fs.fronts.begin() + std::ptrdiff_t(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // partial rings: first point (tail and its predecessor excluded)
    // inside the tail's region truncates the rest
    for (auto& f : fs.fronts) {
      const auto n = f.points.size();
      if (n < 3) continue;
      Pix tail = f.points.back();
      for (std::size_t i = 0; i + 2 < n; ++i) {
        if (chebyshev(f.points[i], tail) <= 1) {
          f.points.resize(i + 1);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return fs;
}

namespace {

double polyline_length_px(const std::vector<Pix>& pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    int dr = std::abs(pts[i].row - pts[i - 1].row);
    int dc = std::abs(pts[i].col - pts[i - 1].col);
    len += (dr + dc == 2) ? std::numbers::sqrt2 : 1.0;
  }
  return len;
}

FrontRecord metrics_with_edt(FrontRecord front, const BitMask& zone,
                             const GradientField& field, const ScalarGrid& grid,
                             const std::vector<double>& zone_sq,
                             const std::vector<double>* land_sq) {
  if (front.points.empty())
    fail(ErrKind::Argument, "front_metrics: empty front");
  for (Pix p : front.points)
    if (!zone.in_bounds(p.row, p.col) || !zone.at(p.row, p.col))
      fail(ErrKind::Consistency,
           "front point (" + std::to_string(p.row) + "," +
               std::to_string(p.col) + ") lies outside the frontal zone");

  double width_sum = 0.0;
  double mag_sum = 0.0;
  std::size_t mag_n = 0;
  double offshore_sum = 0.0;
  for (Pix p : front.points) {
    std::size_t i = zone.idx(p.row, p.col);
    width_sum += 2.0 * std::sqrt(zone_sq[i]) - 1.0;
    if (field.valid[i]) {
      mag_sum += field.mag[i];
      ++mag_n;
    }
    if (land_sq) offshore_sum += std::sqrt((*land_sq)[i]);
  }
  const double n = double(front.points.size());
  front.width_px = width_sum / n;
  front.width_km = front.width_px * grid.km_per_px;
  front.intensity_c_per_km =
      mag_n ? (mag_sum / double(mag_n)) / grid.km_per_px : 0.0;
  front.length_km = polyline_length_px(front.points) * grid.km_per_px;
  if (land_sq) front.offshore_km = (offshore_sum / n) * grid.km_per_px;
  else front.offshore_km.reset();
  return front;
}

bool grid_has_land(const ScalarGrid& grid) {
  return std::find(grid.valid.begin(), grid.valid.end(), std::uint8_t(0)) !=
         grid.valid.end();
}

std::vector<double> land_distances(const ScalarGrid& grid) {
  BitMask sea(grid.rows, grid.cols);
  for (std::size_t i = 0; i < grid.valid.size(); ++i)
    sea.bits[i] = grid.valid[i] ? 1 : 0;
  return squared_distance_to_false(sea);
}

}  // namespace

FrontRecord front_metrics(FrontRecord front, const BitMask& zone,
                          const GradientField& field, const ScalarGrid& grid) {
  std::vector<double> zone_sq = squared_distance_to_false(zone);
  std::vector<double> land_sq;
  const std::vector<double>* land = nullptr;
  if (grid_has_land(grid)) {
    land_sq = land_distances(grid);
    land = &land_sq;
  }
  return metrics_with_edt(std::move(front), zone, field, grid, zone_sq, land);
}

void compute_metrics(FrontSet& fs, const BitMask& zone,
                     const GradientField& field, const ScalarGrid& grid) {
  std::vector<double> zone_sq = squared_distance_to_false(zone);
  std::vector<double> land_sq;
  const std::vector<double>* land = nullptr;
  if (grid_has_land(grid)) {
    land_sq = land_distances(grid);
    land = &land_sq;
  }
  for (auto& f : fs.fronts)
    f = metrics_with_edt(std::move(f), zone, field, grid, zone_sq, land);
}

}  // namespace frontkit
