#pragma once

#include <cstdint>
#include <vector>

#include "frontkit/grid.hpp"

namespace frontkit {

struct BitMask {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;

  BitMask() = default;
  BitMask(int r, int c) : rows(r), cols(c), bits(std::size_t(r) * c, 0) {}

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols + c;
  }
  bool in_bounds(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }
  bool at(int r, int c) const { return bits[idx(r, c)] != 0; }
  void set(int r, int c, bool v) { bits[idx(r, c)] = v ? 1 : 0; }
  std::size_t count() const;
  bool empty() const;

  bool operator==(const BitMask&) const = default;
};

/// Morphological skeleton by the maximum disk method: union over k of
/// (Z eroded k times) minus its opening, with a full 3x3 structuring
/// element. Skeleton is a subset of the zone.
BitMask mdm_skeleton(const BitMask& zone);

/// Skeleton pixel classification under 8-connectivity plus the dangling
/// branches (endpoint up to, excluding, the first intersection).
struct SkeletonGraph {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> degree;  // 8-neighbor count per pixel
  std::vector<Pix> isolated;         // degree 0
  std::vector<Pix> endpoints;        // degree 1
  std::vector<Pix> connections;      // degree 2
  std::vector<Pix> intersections;    // degree >= 3

  struct Branch {
    Pix endpoint;
    std::vector<Pix> path;  // endpoint first; intersection excluded
  };
  std::vector<Branch> branches;
};

SkeletonGraph build_skeleton_graph(const BitMask& skeleton);

/// Discrete skeleton evolution: iteratively remove the branch whose
/// removal loses the fewest pixels of the disk-reconstructed zone, while
/// that loss is <= t. Weights are recomputed every iteration; ties are
/// broken by the lexicographically smallest branch endpoint. A skeleton
/// with no branches is returned unchanged.
BitMask dse_trim(const BitMask& skeleton, const BitMask& zone,
                 double t = 20.0);

}  // namespace frontkit
