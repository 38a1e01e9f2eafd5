#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "monochain/core.hpp"
#include "monochain/geometry.hpp"

namespace monochain::testing {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Point point(std::size_t dim, double lo = -1.0, double hi = 1.0) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = uniform(lo, hi);
    return p;
  }

  Point on_unit_sphere(std::size_t dim) {
    Point p(dim);
    do {
      for (std::size_t i = 0; i < dim; ++i) p[i] = normal();
    } while (norm(p) < 1e-3);
    return p / norm(p);
  }

private:
  std::mt19937_64 engine_;
};

/// Triple with pairwise distances >= 5% of its diameter and a middle angle
/// of at most 170 degrees, so no triple degree is near-degenerate and the
/// circumradius stays below 3x the diameter.
inline std::array<Point, 3> well_shaped_triple(Rng& rng, std::size_t dim) {
  while (true) {
    std::array<Point, 3> t{rng.point(dim), rng.point(dim), rng.point(dim)};
    const double ab = distance(t[0], t[1]);
    const double bc = distance(t[1], t[2]);
    const double ac = distance(t[0], t[2]);
    const double diam = std::max({ab, bc, ac});
    if (std::min({ab, bc, ac}) < 0.05 * diam) continue;
    const double cos_mid = (ab * ab + bc * bc - ac * ac) / (2.0 * ab * bc);
    if (cos_mid < std::cos(170.0 * std::numbers::pi / 180.0)) continue;
    return t;
  }
}

/// Chains mixing smooth arcs with noise: a random circle or helix-like
/// curve perturbed with a random amount of Gaussian noise.
inline Chain random_chain(Rng& rng, std::size_t length, std::size_t dim) {
  const double radius = rng.uniform(0.5, 3.0);
  const double step = rng.uniform(0.05, 1.5);
  const double noise = rng.integer(0, 3) == 0 ? 0.0 : rng.uniform(0.0, 0.5);
  Chain chain;
  for (std::size_t k = 0; k < length; ++k) {
    Point p(dim);
    const double t = step * static_cast<double>(k);
    p[0] = radius * std::cos(t);
    if (dim > 1) p[1] = radius * std::sin(t);
    for (std::size_t i = 2; i < dim; ++i) p[i] = 0.2 * t;
    for (std::size_t i = 0; i < dim; ++i) p[i] += noise * rng.normal();
    chain.push_back(std::move(p));
  }
  return chain;
}

/// Uniformly random orthogonal matrix (rows) via Gram-Schmidt on Gaussian vectors.
struct RigidMotion {
  std::vector<Point> rows;
  Point shift;

  Point operator()(const Point& p) const {
    Point q(p.dimension());
    for (std::size_t i = 0; i < rows.size(); ++i) q[i] = dot(rows[i], p) + shift[i];
    return q;
  }
  Chain operator()(const Chain& c) const {
    Chain out;
    for (const auto& p : c) out.push_back((*this)(p));
    return out;
  }
};

inline RigidMotion random_motion(Rng& rng, std::size_t dim) {
  RigidMotion m;
  while (m.rows.size() < dim) {
    Point v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.normal();
    for (const auto& r : m.rows) v -= dot(v, r) * r;
    for (const auto& r : m.rows) v -= dot(v, r) * r;
    const double n = norm(v);
    if (n < 1e-6) continue;
    m.rows.push_back(v / n);
  }
  m.shift = rng.point(dim, -5.0, 5.0);
  return m;
}

inline double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace monochain::testing
