#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontkit/fronts.hpp"

namespace frontkit {

/// Per-day aggregate. intensity/width/offshore are length-weighted means,
/// length is a plain mean; all are missing on an empty day.
struct DailySummary {
  std::string date;
  int count = 0;
  std::optional<double> intensity_c_per_km;
  std::optional<double> width_km;
  std::optional<double> length_km;
  std::optional<double> offshore_km;
};

DailySummary daily_summary(const FrontSet& fs);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population
  int n = 0;
};

struct SeasonStats {
  std::string season;  // MAM, JJA, SON, DJF
  MeanStd count, intensity, width_km, length_km, offshore_km;
};

/// Bucket daily summaries into MAM/JJA/SON/DJF by the month of their date
/// (ISO yyyy-mm-dd); days with unparseable dates are skipped. Seasons are
/// reported in the fixed order MAM, JJA, SON, DJF.
std::vector<SeasonStats> seasonal_aggregate(
    const std::vector<DailySummary>& series);

/// One-sided periodogram of a daily series at frequencies k/N,
/// k = 0..floor(N/2). Missing interior entries are linearly interpolated
/// (edges extended); the mean is removed before the transform. Powers are
/// folded (|X_k|^2/N, doubled for conjugate-paired bins) so their sum
/// equals N times the variance of the detrended series.
std::vector<std::pair<double, double>> periodogram(
    const std::vector<std::optional<double>>& series);

/// Ordinary least squares; returns (slope, intercept).
std::pair<double, double> linear_trend(
    const std::vector<std::pair<double, double>>& xy);

}  // namespace frontkit
