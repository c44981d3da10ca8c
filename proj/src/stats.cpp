#include "frontkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frontkit/errors.hpp"

namespace frontkit {

namespace {

std::optional<double> weighted_mean(const std::vector<double>& values,
                                    const std::vector<double>& weights) {
  if (values.empty()) return std::nullopt;
  double wsum = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += values[i] * weights[i];
    wsum += weights[i];
  }
  if (wsum <= 0.0) {  // zero-length fronts: fall back to the plain mean
    acc = 0.0;
    for (double v : values) acc += v;
    return acc / double(values.size());
  }
  return acc / wsum;
}

}  // namespace

DailySummary daily_summary(const FrontSet& fs) {
  DailySummary s;
  s.date = fs.day;
  s.count = int(fs.fronts.size());
  if (fs.fronts.empty()) return s;

  std::vector<double> inten, width, offsh, inten_w, width_w, offsh_w;
  double len_sum = 0.0;
  for (const auto& f : fs.fronts) {
    inten.push_back(f.intensity_c_per_km);
    inten_w.push_back(f.length_km);
    width.push_back(f.width_km);
    width_w.push_back(f.length_km);
    if (f.offshore_km) {
      offsh.push_back(*f.offshore_km);
      offsh_w.push_back(f.length_km);
    }
    len_sum += f.length_km;
  }
  s.intensity_c_per_km = weighted_mean(inten, inten_w);
  s.width_km = weighted_mean(width, width_w);
  s.length_km = len_sum / double(fs.fronts.size());
  s.offshore_km = weighted_mean(offsh, offsh_w);
  return s;
}

namespace {

// -1 when the date is not yyyy-mm-dd (or yyyymmdd)
int month_of(const std::string& date) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  std::string d;
  for (char c : date)
    if (digit(c)) d.push_back(c);
    else if (c != '-') return -1;
  if (d.size() != 8) return -1;
  int m = (d[4] - '0') * 10 + (d[5] - '0');
  return (m >= 1 && m <= 12) ? m : -1;
}

int season_index(int month) {
  if (month >= 3 && month <= 5) return 0;   // MAM
  if (month >= 6 && month <= 8) return 1;   // JJA
  if (month >= 9 && month <= 11) return 2;  // SON
  return 3;                                 // DJF
}

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd ms;
  ms.n = int(xs.size());
  if (xs.empty()) return ms;
  double sum = 0.0;
  for (double x : xs) sum += x;
  ms.mean = sum / double(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - ms.mean) * (x - ms.mean);
  ms.stddev = std::sqrt(var / double(xs.size()));  // population
  return ms;
}

}  // namespace

std::vector<SeasonStats> seasonal_aggregate(
    const std::vector<DailySummary>& series) {
  static const char* kNames[4] = {"MAM", "JJA", "SON", "DJF"};
  std::array<std::vector<double>, 4> count, inten, width, length, offsh;

  for (const auto& day : series) {
    int m = month_of(day.date);
    if (m < 0) continue;
    int s = season_index(m);
    count[s].push_back(double(day.count));
    if (day.intensity_c_per_km) inten[s].push_back(*day.intensity_c_per_km);
    if (day.width_km) width[s].push_back(*day.width_km);
    if (day.length_km) length[s].push_back(*day.length_km);
    if (day.offshore_km) offsh[s].push_back(*day.offshore_km);
  }

  std::vector<SeasonStats> out;
  for (int s = 0; s < 4; ++s) {
    if (count[s].empty()) continue;
    SeasonStats st;
    st.season = kNames[s];
    st.count = mean_std(count[s]);
    st.intensity = mean_std(inten[s]);
    st.width_km = mean_std(width[s]);
    st.length_km = mean_std(length[s]);
    st.offshore_km = mean_std(offsh[s]);
    out.push_back(st);
  }
  return out;
}

std::vector<std::pair<double, double>> periodogram(
    const std::vector<std::optional<double>>& series) {
  const int n = int(series.size());
  if (n < 2) fail(ErrKind::Argument, "periodogram needs at least 2 samples");

  // fill gaps by linear interpolation, extending flat at the edges
  std::vector<double> x(n);
  int first = -1, last = -1;
  for (int i = 0; i < n; ++i)
    if (series[i]) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) fail(ErrKind::Argument, "periodogram: all entries missing");
  for (int i = 0; i < n; ++i) {
    if (series[i]) {
      x[i] = *series[i];
      continue;
    }
    if (i < first) x[i] = *series[first];
    else if (i > last) x[i] = *series[last];
    else {
      int lo = i, hi = i;
      while (!series[lo]) --lo;
      while (!series[hi]) ++hi;
      double t = double(i - lo) / double(hi - lo);
      x[i] = *series[lo] + t * (*series[hi] - *series[lo]);
    }
  }

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= double(n);
  for (double& v : x) v -= mean;

  // one-sided folded powers: sum over bins equals n * variance
  std::vector<std::pair<double, double>> out;
  const int kmax = n / 2;
  for (int k = 0; k <= kmax; ++k) {
    double re = 0.0, im = 0.0;
    for (int j = 0; j < n; ++j) {
      double ang = -2.0 * std::numbers::pi * double(k) * double(j) / double(n);
      re += x[j] * std::cos(ang);
      im += x[j] * std::sin(ang);
    }
    double p = (re * re + im * im) / double(n);
    bool paired = k != 0 && !(n % 2 == 0 && k == kmax);
    if (paired) p *= 2.0;
    out.emplace_back(double(k) / double(n), p);
  }
  return out;
}

std::pair<double, double> linear_trend(
    const std::vector<std::pair<double, double>>& xy) {
  if (xy.size() < 2) fail(ErrKind::Argument, "linear_trend needs >= 2 points");
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= double(xy.size());
  my /= double(xy.size());
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) fail(ErrKind::Argument, "linear_trend: all x equal");
  double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace frontkit
