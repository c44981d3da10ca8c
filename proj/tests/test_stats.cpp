#include <doctest.h>

#include <cmath>

#include "frontkit/errors.hpp"
#include "frontkit/stats.hpp"
#include "test_util.hpp"

using namespace frontkit;

namespace {

FrontRecord metric_front(double length_km, double intensity, double width_km,
                         std::optional<double> offshore = std::nullopt) {
  FrontRecord f;
  f.points = {{0, 0}, {0, 1}};
  f.length_km = length_km;
  f.intensity_c_per_km = intensity;
  f.width_km = width_km;
  f.offshore_km = offshore;
  return f;
}

}  // namespace

TEST_CASE("daily: length-weighted intensity") {
  FrontSet fs;
  fs.day = "2024-01-01";
  fs.fronts = {metric_front(10, 0.1, 20), metric_front(30, 0.2, 40)};
  DailySummary s = daily_summary(fs);
  CHECK(s.count == 2);
  CHECK(*s.intensity_c_per_km == doctest::Approx(0.175).epsilon(1e-12));
  CHECK(*s.width_km == doctest::Approx((10.0 * 20 + 30.0 * 40) / 40.0).epsilon(1e-12));
  CHECK(*s.length_km == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("daily: single front reports its own metrics") {
  FrontSet fs;
  fs.fronts = {metric_front(120, 0.14, 35, 80.0)};
  DailySummary s = daily_summary(fs);
  CHECK(s.count == 1);
  CHECK(*s.intensity_c_per_km == 0.14);
  CHECK(*s.width_km == 35.0);
  CHECK(*s.length_km == 120.0);
  CHECK(*s.offshore_km == 80.0);
}

TEST_CASE("daily: empty day reports count 0, metrics missing") {
  FrontSet fs;
  DailySummary s = daily_summary(fs);
  CHECK(s.count == 0);
  CHECK_FALSE(s.intensity_c_per_km.has_value());
  CHECK_FALSE(s.width_km.has_value());
  CHECK_FALSE(s.length_km.has_value());
  CHECK_FALSE(s.offshore_km.has_value());
}

TEST_CASE("daily: weighted means stay within the value range") {
  testutil::Rng rng(321);
  for (int trial = 0; trial < 50; ++trial) {
    FrontSet fs;
    int n = rng.range(1, 8);
    double lo = 1e9, hi = -1e9;
    for (int i = 0; i < n; ++i) {
      double inten = rng.unit();
      lo = std::min(lo, inten);
      hi = std::max(hi, inten);
      fs.fronts.push_back(metric_front(1.0 + 50.0 * rng.unit(), inten, 10));
    }
    DailySummary s = daily_summary(fs);
    CHECK(*s.intensity_c_per_km >= lo - 1e-12);
    CHECK(*s.intensity_c_per_km <= hi + 1e-12);
  }
}

TEST_CASE("seasonal: March days land in MAM") {
  std::vector<DailySummary> series;
  for (int d = 0; d < 4; ++d) {
    DailySummary s;
    s.date = "2024-03-0" + std::to_string(d + 1);
    s.count = 5;
    series.push_back(s);
  }
  auto seasons = seasonal_aggregate(series);
  REQUIRE(seasons.size() == 1);
  CHECK(seasons[0].season == "MAM");
  CHECK(seasons[0].count.mean == 5.0);
  CHECK(seasons[0].count.stddev == 0.0);
  CHECK(seasons[0].count.n == 4);
}

TEST_CASE("seasonal: December and January share the DJF bucket") {
  std::vector<DailySummary> series(2);
  series[0].date = "2023-12-15";
  series[0].count = 2;
  series[1].date = "2024-01-15";
  series[1].count = 4;
  auto seasons = seasonal_aggregate(series);
  REQUIRE(seasons.size() == 1);
  CHECK(seasons[0].season == "DJF");
  CHECK(seasons[0].count.mean == 3.0);
  CHECK(seasons[0].count.n == 2);
}

TEST_CASE("seasonal: empty input gives an empty report") {
  CHECK(seasonal_aggregate({}).empty());
}

TEST_CASE("periodogram: pure sine peaks at its own frequency") {
  std::vector<std::optional<double>> x(100);
  for (int i = 0; i < 100; ++i)
    x[std::size_t(i)] = std::sin(2.0 * 3.14159265358979323846 * 0.1 * i);
  auto spec = periodogram(x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < spec.size(); ++k)
    if (spec[k].second > spec[best].second) best = k;
  CHECK(spec[best].first == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("periodogram: constant series has zero power") {
  std::vector<std::optional<double>> x(64, 3.25);
  for (auto [f, p] : periodogram(x)) CHECK(p <= 1e-12);
}

TEST_CASE("periodogram: two equal tones at bin frequencies") {
  const int n = 100;
  std::vector<std::optional<double>> x(n);
  for (int i = 0; i < n; ++i)
    x[std::size_t(i)] = std::sin(2.0 * 3.14159265358979323846 * 0.10 * i) +
                        std::sin(2.0 * 3.14159265358979323846 * 0.25 * i);
  auto spec = periodogram(x);
  // closed-form oracle: an amplitude-1 sine at an exact bin carries
  // folded power n/2
  double p10 = 0.0, p25 = 0.0;
  for (auto [f, p] : spec) {
    if (std::fabs(f - 0.10) < 1e-12) p10 = p;
    if (std::fabs(f - 0.25) < 1e-12) p25 = p;
  }
  CHECK(p10 == doctest::Approx(n / 2.0).epsilon(1e-9));
  CHECK(p25 == doctest::Approx(n / 2.0).epsilon(1e-9));
  for (auto [f, p] : spec)
    if (std::fabs(f - 0.10) > 1e-12 && std::fabs(f - 0.25) > 1e-12)
      CHECK(p < p10 / 2.0);
}

TEST_CASE("periodogram: missing values are interpolated first") {
  std::vector<std::optional<double>> x(50);
  for (int i = 0; i < 50; ++i) x[std::size_t(i)] = double(i % 10);
  x[7].reset();
  x[8].reset();
  auto spec = periodogram(x);
  CHECK(spec.size() == 26);
  CHECK(spec[0].first == 0.0);
}

TEST_CASE("periodogram: all-missing series is an error") {
  std::vector<std::optional<double>> x(10);
  CHECK_THROWS_AS(periodogram(x), Error);
}

TEST_CASE("periodogram: Parseval identity") {
  testutil::Rng rng(246);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = std::size_t(rng.range(8, 200));
    std::vector<std::optional<double>> x(n);
    for (auto& v : x) v = rng.unit() * 10.0 - 5.0;
    double mean = 0.0;
    for (auto& v : x) mean += *v;
    mean /= double(n);
    double var = 0.0;
    for (auto& v : x) var += (*v - mean) * (*v - mean);
    var /= double(n);
    double sum = 0.0;
    for (auto [f, p] : periodogram(x)) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(double(n) * var).epsilon(1e-9));
  }
}

TEST_CASE("trend: exact line") {
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < 10; ++i) xy.emplace_back(i, 2.0 * i + 1.0);
  auto [slope, icept] = linear_trend(xy);
  CHECK(slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(icept == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trend: constant series") {
  std::vector<std::pair<double, double>> xy = {{0, 3}, {1, 3}, {2, 3}};
  auto [slope, icept] = linear_trend(xy);
  CHECK(slope == 0.0);
  CHECK(icept == 3.0);
}

TEST_CASE("trend: symmetric points give slope 0, intercept 1/3") {
  // closed-form OLS: slope = sum((x-1)(y-1/3)) / sum((x-1)^2) = 0
  std::vector<std::pair<double, double>> xy = {{0, 0}, {1, 1}, {2, 0}};
  auto [slope, icept] = linear_trend(xy);
  CHECK(slope == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(icept == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("trend: degenerate x is an error") {
  std::vector<std::pair<double, double>> xy = {{1, 0}, {1, 5}};
  CHECK_THROWS_AS(linear_trend(xy), Error);
}

TEST_CASE("trend: residuals are orthogonal to x") {
  testutil::Rng rng(135);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<double, double>> xy;
    int n = rng.range(3, 40);
    for (int i = 0; i < n; ++i)
      xy.emplace_back(rng.unit() * 10, rng.unit() * 4 - 2);
    if (xy[0].first == xy[1].first) continue;
    auto [slope, icept] = linear_trend(xy);
    double dot = 0.0, scale = 0.0;
    for (auto [x, y] : xy) {
      dot += x * (y - slope * x - icept);
      scale += std::fabs(x * y) + 1.0;
    }
    CHECK(std::fabs(dot) / scale <= 1e-9);
  }
}
