#include "frontkit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "frontkit/errors.hpp"

namespace frontkit {

std::uint64_t GaussianStream::next_u64() {
  // SplitMix64: Steele, Lea & Flood's mixer with the golden-ratio increment
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double GaussianStream::next_unit() {
  // 53 high bits, offset by half an ulp so the result is never 0 or 1
  return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = next_unit();
  double u2 = next_unit();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

namespace {

struct SignedDist {
  double dist;
  double side;  // sign of the cross product at the nearest segment
};

SignedDist signed_distance(double pr, double pc, const Curve& curve) {
  if (curve.empty()) return {std::numeric_limits<double>::infinity(), 1.0};
  if (curve.size() == 1) {
    double dr = pr - curve[0].first, dc = pc - curve[0].second;
    return {std::hypot(dr, dc), 1.0};
  }
  double best = std::numeric_limits<double>::infinity();
  double side = 1.0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    double ar = curve[i - 1].first, ac = curve[i - 1].second;
    double br = curve[i].first, bc = curve[i].second;
    double vr = br - ar, vc = bc - ac;
    double wr = pr - ar, wc = pc - ac;
    double len2 = vr * vr + vc * vc;
    double t = len2 > 0.0 ? std::clamp((wr * vr + wc * vc) / len2, 0.0, 1.0) : 0.0;
    double dr = wr - t * vr, dc = wc - t * vc;
    double d = std::hypot(dr, dc);
    if (d < best) {
      best = d;
      double cross = vr * wc - vc * wr;
      side = cross >= 0.0 ? 1.0 : -1.0;
    }
  }
  return {best, side};
}

}  // namespace

SynthResult synth_field(const SynthSpec& spec) {
  if (spec.rows <= 0 || spec.cols <= 0)
    fail(ErrKind::Argument, "synth_field: non-positive grid size");
  if (spec.amplitude_c < 0.0 || spec.half_width_px < 1.0)
    fail(ErrKind::Argument, "synth_field: need amplitude >= 0, half_width >= 1");
  if (spec.noise_sigma_c < 0.0)
    fail(ErrKind::Argument, "synth_field: negative noise sigma");

  SynthResult out;
  out.grid = ScalarGrid::make(spec.rows, spec.cols);
  out.truth = spec.curves;

  GaussianStream noise(spec.seed);
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c) {
      double v = spec.base_c;
      for (const auto& curve : spec.curves) {
        SignedDist sd = signed_distance(double(r), double(c), curve);
        v += spec.amplitude_c *
             std::tanh(sd.side * sd.dist / spec.half_width_px);
      }
      if (spec.noise_sigma_c > 0.0) v += spec.noise_sigma_c * noise.next();
      out.grid.values[out.grid.idx(r, c)] = float(v);
    }
  return out;
}

TruthScore truth_score(const FrontSet& detected,
                       const std::vector<Curve>& truth) {
  TruthScore score;

  std::size_t n_pts = 0;
  double err_sum = 0.0;
  for (const auto& f : detected.fronts)
    for (Pix p : f.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& curve : truth)
        best = std::min(best,
                        signed_distance(double(p.row), double(p.col), curve).dist);
      err_sum += best;
      ++n_pts;
    }
  if (n_pts > 0 && !truth.empty()) score.mean_error_px = err_sum / double(n_pts);

  // sample each truth curve at unit arc-length steps
  std::vector<CurvePoint> samples;
  for (const auto& curve : truth) {
    if (curve.empty()) continue;
    samples.push_back(curve.front());
    double carry = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      double ar = curve[i - 1].first, ac = curve[i - 1].second;
      double vr = curve[i].first - ar, vc = curve[i].second - ac;
      double len = std::hypot(vr, vc);
      double pos = 1.0 - carry;
      while (pos <= len) {
        samples.emplace_back(ar + vr * pos / len, ac + vc * pos / len);
        pos += 1.0;
      }
      carry = len - (pos - 1.0);
    }
  }
  if (samples.empty()) {
    score.recall = 1.0;
    return score;
  }

  std::size_t hit = 0;
  for (const auto& s : samples) {
    bool near = false;
    for (const auto& f : detected.fronts) {
      for (Pix p : f.points) {
        double dr = s.first - p.row, dc = s.second - p.col;
        if (dr * dr + dc * dc <= 4.0) {
          near = true;
          break;
        }
      }
      if (near) break;
    }
    if (near) ++hit;
  }
  score.recall = double(hit) / double(samples.size());
  return score;
}

}  // namespace frontkit
