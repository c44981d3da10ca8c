#include "frontkit/morphology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frontkit/edt.hpp"
#include "frontkit/errors.hpp"

namespace frontkit {

std::size_t BitMask::count() const {
  return std::size_t(std::count(bits.begin(), bits.end(), std::uint8_t(1)));
}

bool BitMask::empty() const {
  return std::find(bits.begin(), bits.end(), std::uint8_t(1)) == bits.end();
}

namespace {

// erosion by the full 3x3 square; outside the grid counts as background
BitMask erode3(const BitMask& m) {
  BitMask out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      bool all = true;
      for (int dr = -1; dr <= 1 && all; ++dr)
        for (int dc = -1; dc <= 1 && all; ++dc) {
          int rr = r + dr, cc = c + dc;
          all = m.in_bounds(rr, cc) && m.at(rr, cc);
        }
      out.set(r, c, all);
    }
  return out;
}

BitMask dilate3(const BitMask& m) {
  BitMask out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      bool any = false;
      for (int dr = -1; dr <= 1 && !any; ++dr)
        for (int dc = -1; dc <= 1 && !any; ++dc) {
          int rr = r + dr, cc = c + dc;
          any = m.in_bounds(rr, cc) && m.at(rr, cc);
        }
      out.set(r, c, any);
    }
  return out;
}

}  // namespace

BitMask mdm_skeleton(const BitMask& zone) {
  BitMask skel(zone.rows, zone.cols);
  BitMask eroded = zone;
  while (!eroded.empty()) {
    BitMask opened = dilate3(erode3(eroded));
    for (std::size_t i = 0; i < skel.bits.size(); ++i)
      if (eroded.bits[i] && !opened.bits[i]) skel.bits[i] = 1;
    eroded = erode3(eroded);
  }
  return skel;
}

namespace {

constexpr int kN8r[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kN8c[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

}  // namespace

SkeletonGraph build_skeleton_graph(const BitMask& skeleton) {
  SkeletonGraph g;
  g.rows = skeleton.rows;
  g.cols = skeleton.cols;
  g.degree.assign(skeleton.bits.size(), 0);

  for (int r = 0; r < g.rows; ++r)
    for (int c = 0; c < g.cols; ++c) {
      if (!skeleton.at(r, c)) continue;
      int deg = 0;
      for (int k = 0; k < 8; ++k) {
        int rr = r + kN8r[k], cc = c + kN8c[k];
        if (skeleton.in_bounds(rr, cc) && skeleton.at(rr, cc)) ++deg;
      }
      g.degree[skeleton.idx(r, c)] = std::uint8_t(std::min(deg, 255));
      Pix p{r, c};
      if (deg == 0) g.isolated.push_back(p);
      else if (deg == 1) g.endpoints.push_back(p);
      else if (deg == 2) g.connections.push_back(p);
      else g.intersections.push_back(p);
    }

  auto deg_at = [&](Pix p) { return g.degree[skeleton.idx(p.row, p.col)]; };
  auto next_of = [&](Pix cur, Pix prev) -> Pix {
    for (int k = 0; k < 8; ++k) {
      Pix n{cur.row + kN8r[k], cur.col + kN8c[k]};
      if (!skeleton.in_bounds(n.row, n.col) || !skeleton.at(n.row, n.col))
        continue;
      if (n == prev) continue;
      return n;
    }
    return cur;  // unreachable for degree >= 1 walks
  };

  for (Pix e : g.endpoints) {
    SkeletonGraph::Branch br;
    br.endpoint = e;
    br.path.push_back(e);
    Pix prev = e;
    Pix cur = next_of(e, e);
    while (true) {
      if (deg_at(cur) >= 3) {  // first intersection ends the branch
        g.branches.push_back(std::move(br));
        break;
      }
      if (deg_at(cur) == 1) break;  // pure path component, no branch
      br.path.push_back(cur);
      Pix nxt = next_of(cur, prev);
      prev = cur;
      cur = nxt;
    }
  }
  return g;
}

namespace {

// coverage bookkeeping for the disk-reconstructed zone
struct Reconstruction {
  int rows = 0, cols = 0;
  std::vector<double> sq_radius;  // per pixel, from the zone EDT
  std::vector<int> cover;         // how many skeleton pixels' disks cover p

  std::size_t idx(int r, int c) const {
    return std::size_t(r) * cols + c;
  }

  template <typename Fn>
  void for_disk(Pix s, Fn&& fn) const {
    double r2 = sq_radius[idx(s.row, s.col)];
    int rad;
    if (r2 == std::numeric_limits<double>::infinity() ||
        r2 > double(rows) * rows + double(cols) * cols) {
      rad = std::max(rows, cols);
      r2 = std::numeric_limits<double>::infinity();
    } else {
      rad = int(std::floor(std::sqrt(r2)));
    }
    for (int dr = -rad; dr <= rad; ++dr) {
      int rr = s.row + dr;
      if (rr < 0 || rr >= rows) continue;
      for (int dc = -rad; dc <= rad; ++dc) {
        int cc = s.col + dc;
        if (cc < 0 || cc >= cols) continue;
        if (double(dr) * dr + double(dc) * dc <= r2) fn(rr, cc);
      }
    }
  }

  void add(Pix s) {
    for_disk(s, [&](int r, int c) { ++cover[idx(r, c)]; });
  }
  void remove(Pix s) {
    for_disk(s, [&](int r, int c) { --cover[idx(r, c)]; });
  }

  // pixels covered only by this branch's disks
  std::size_t unique_coverage(const std::vector<Pix>& branch,
                              std::vector<int>& scratch,
                              std::vector<std::size_t>& touched) const {
    touched.clear();
    for (Pix s : branch)
      for_disk(s, [&](int r, int c) {
        std::size_t i = idx(r, c);
        if (scratch[i] == 0) touched.push_back(i);
        ++scratch[i];
      });
    std::size_t w = 0;
    for (std::size_t i : touched) {
      if (cover[i] == scratch[i]) ++w;
      scratch[i] = 0;
    }
    return w;
  }
};

}  // namespace

BitMask dse_trim(const BitMask& skeleton, const BitMask& zone, double t) {
  for (std::size_t i = 0; i < skeleton.bits.size(); ++i)
    if (skeleton.bits[i] && !zone.bits[i])
      fail(ErrKind::Consistency, "skeleton pixel outside the zone");

  BitMask cur = skeleton;
  Reconstruction rec;
  rec.rows = zone.rows;
  rec.cols = zone.cols;
  rec.sq_radius = squared_distance_to_false(zone);
  rec.cover.assign(zone.bits.size(), 0);
  for (int r = 0; r < cur.rows; ++r)
    for (int c = 0; c < cur.cols; ++c)
      if (cur.at(r, c)) rec.add({r, c});

  std::vector<int> scratch(zone.bits.size(), 0);
  std::vector<std::size_t> touched;

  while (true) {
    SkeletonGraph g = build_skeleton_graph(cur);
    if (g.branches.empty()) break;

    std::size_t best = 0;
    std::size_t best_w = std::numeric_limits<std::size_t>::max();
    for (std::size_t b = 0; b < g.branches.size(); ++b) {
      std::size_t w = rec.unique_coverage(g.branches[b].path, scratch, touched);
      if (w < best_w ||
          (w == best_w && g.branches[b].endpoint < g.branches[best].endpoint)) {
        best_w = w;
        best = b;
      }
    }
    if (double(best_w) > t) break;

    for (Pix p : g.branches[best].path) {
      cur.set(p.row, p.col, false);
      rec.remove(p);
    }
  }
  return cur;
}

}  // namespace frontkit
