#pragma once

#include <map>
#include <set>
#include <vector>

#include "frontkit/fronts.hpp"

namespace frontkit {

/// Day-indexed id assignments linking fronts across time.
struct TrackSet {
  std::vector<std::vector<int>> day_ids;  // per day, id per front index
  std::map<int, int> lifetimes;           // id -> consecutive-day count
  std::vector<double> iou_series;         // one entry per adjacent day pair
  int next_id = 1;
};

/// Mean over the longer front's points of the minimum Euclidean distance
/// to the shorter front, in pixels. Point-count ties pick the front with
/// the lexicographically smaller first point as the longer side.
double front_distance(const FrontRecord& a, const FrontRecord& b);

/// Assign ids from prev to next: per prev front in index order, candidates
/// are unassigned next fronts passing the point-count ratio gate
/// (min/max >= length_ratio); the distance argmin gets the id iff the
/// distance is at most the mean of the two widths (pixels). Remaining next
/// fronts receive fresh ids from next_id.
void match_day_pair(const FrontSet& prev, FrontSet& next, double length_ratio,
                    int& next_id);

/// Intersection over union of two id sets; 1 when both are empty.
double iou(const std::set<int>& a, const std::set<int>& b);

/// Track a day sequence: day 0 gets ids 1..P, later days are matched
/// pairwise. Ids die permanently; lifetimes count consecutive days.
TrackSet track_sequence(std::vector<FrontSet>& days,
                        double length_ratio = 0.5);

}  // namespace frontkit
