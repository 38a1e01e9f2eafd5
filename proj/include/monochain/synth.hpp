#pragma once

// Synthetic data for the noisy-circle experiment: sampled circles,
// calibrated Gaussian noise, MSE, Pearson correlation and the sweep
// comparing raw, moving-average and sphere-preserving outputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "monochain/core.hpp"
#include "monochain/filters.hpp"
#include "monochain/monotonicity.hpp"

namespace monochain {

/// `loops` turns around a circle of the given radius, `samples_per_loop`
/// evenly spaced samples per turn, starting at angle 0.
inline Chain gen_circle_chain(int samples_per_loop, int loops, double radius) {
  if (samples_per_loop < 3) throw InputError("samples_per_loop must be at least 3");
  if (loops < 1) throw InputError("loops must be positive");
  if (!std::isfinite(radius) || !(radius > 0.0)) throw InputError("radius must be positive");
  Chain chain;
  const int total = samples_per_loop * loops;
  for (int k = 0; k < total; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k % samples_per_loop) /
                         static_cast<double>(samples_per_loop);
    chain.push_back(Point{radius * std::cos(theta), radius * std::sin(theta)});
  }
  return chain;
}

/// Standard normal draws from mt19937_64 via Box-Muller. Both stages are
/// fully specified, so a seed yields the same stream on every platform
/// (up to libm rounding).
class GaussianSource {
public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Adds iid Gaussian noise to every coordinate with variance
/// target_mse / dimension, so the expected squared displacement per point
/// equals target_mse.
inline Chain add_noise(const Chain& chain, double target_mse, std::uint64_t seed) {
  if (!std::isfinite(target_mse) || target_mse < 0.0) {
    throw InputError("target MSE must be finite and nonnegative");
  }
  if (target_mse == 0.0 || chain.empty()) return chain;
  const double sigma = std::sqrt(target_mse / static_cast<double>(chain.dimension()));
  GaussianSource gauss(seed);
  Chain out;
  for (const auto& p : chain) {
    Point q = p;
    for (std::size_t i = 0; i < q.dimension(); ++i) q[i] += sigma * gauss();
    out.push_back(std::move(q));
  }
  return out;
}

/// Mean squared Euclidean distance between corresponding points.
inline double mse(const Chain& a, const Chain& b) {
  if (a.size() != b.size()) throw InputError("chains differ in length");
  if (a.empty()) return 0.0;
  if (a.dimension() != b.dimension()) throw InputError("chains differ in dimension");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point d = a[i] - b[i];
    sum += dot(d, d);
  }
  return sum / static_cast<double>(a.size());
}

/// Sample Pearson correlation coefficient.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InputError("pearson: sequences differ in length");
  if (xs.size() < 2) throw InputError("pearson: need at least two samples");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedStatistic("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct SweepRecord {
  double target_mse = 0.0;
  double measured_mse = 0.0;
  Degree degree_raw;
  Degree degree_ma3;
  Degree degree_ma5;
  Degree degree_sp;
};

struct SweepConfig {
  int samples_per_loop = 10;
  int loops = 3;
  double radius = 1.0;
};

/// Noise grid 0, 0.005, ..., 0.05.
inline std::vector<double> default_noise_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.005 * i);
  return grid;
}

/// Per-trial outcome; exposed so callers can check per-trial properties.
struct TrialResult {
  std::uint64_t seed;
  double measured_mse;
  Degree raw, ma3, ma5, sp;
};

inline TrialResult run_trial(const Chain& clean, double target_mse, std::uint64_t seed) {
  const Chain noisy = add_noise(clean, target_mse, seed);
  return {seed,
          mse(clean, noisy),
          signal_degree(noisy),
          signal_degree(ma_filter(noisy, 3)),
          signal_degree(ma_filter(noisy, 5)),
          signal_degree(sp_filter(noisy))};
}

/// For every noise level, average over `trials` noisy copies of the
/// circle chain. Trial t uses seed + t at every level.
inline std::vector<SweepRecord> run_sweep(std::span<const double> noise_grid, int trials,
                                          std::uint64_t seed, const SweepConfig& config = {}) {
  if (trials < 1) throw InputError("trials must be positive");
  const Chain clean = gen_circle_chain(config.samples_per_loop, config.loops, config.radius);
  std::vector<SweepRecord> records;
  records.reserve(noise_grid.size());
  for (const double level : noise_grid) {
    double m = 0.0, raw = 0.0, ma3 = 0.0, ma5 = 0.0, sp = 0.0;
    for (int t = 0; t < trials; ++t) {
      const TrialResult r = run_trial(clean, level, seed + static_cast<std::uint64_t>(t));
      m += r.measured_mse;
      raw += r.raw.value();
      ma3 += r.ma3.value();
      ma5 += r.ma5.value();
      sp += r.sp.value();
    }
    const double n = static_cast<double>(trials);
    records.push_back({level, m / n, Degree(raw / n), Degree(ma3 / n), Degree(ma5 / n),
                       Degree(sp / n)});
  }
  return records;
}

}  // namespace monochain
