#pragma once

// Brute-force check of the closed-form triple degree: search directly
// for the smallest ball that contains p1 and p3 but not p2.
//
// Only distances are used. The optimal center can always be taken in
// the plane of the triple (dropping the out-of-plane offset shrinks all
// three distances alike), so the search runs over 2D plane coordinates.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "monochain/core.hpp"

namespace monochain {

struct BallOracleOptions {
  int grid = 200;             // samples per axis and round
  int refinements = 6;        // zoom rounds after the coarse pass
  double extent = 10.0;       // coarse half-width, in multiples of the triple's diameter
  double zoom_cells = 10.0;   // half-width of each refined window, in previous cells
};

/// Numerical infimum radius of closed balls containing p1 and p3 and
/// excluding p2. Returns +inf when no sampled center separates them.
///
/// When p2 sits inside the ball on segment p1p3 the separating centers form
/// a wedge with its apex at the circumcenter, so each zoom window must be
/// wide enough to contain the apex; very flat triples (middle angle close
/// to 180 degrees, circumradius beyond the search extent) are out of reach.
inline Degree minimal_ball_oracle(const Point& p1, const Point& p2, const Point& p3,
                                  const BallOracleOptions& opt = {}) {
  Point::require_same_dimension(p1, p2);
  Point::require_same_dimension(p1, p3);
  if (p1.dimension() != 2 && p1.dimension() != 3) {
    throw InputError("ball oracle supports dimensions 2 and 3 only");
  }
  if (p1 == p2 || p2 == p3 || p1 == p3) throw InputError("ball oracle needs distinct points");

  // Plane coordinates with p1 at the origin and p3 on the first axis.
  const Point axis = p3 - p1;
  const double c = norm(axis);
  const Point w = p2 - p1;
  double along = 0.0;
  for (std::size_t i = 0; i < axis.dimension(); ++i) along += w[i] * axis[i];
  along /= c;
  double off2 = 0.0;
  for (std::size_t i = 0; i < w.dimension(); ++i) {
    const double r = w[i] - along * axis[i] / c;
    off2 += r * r;
  }
  using P2 = std::array<double, 2>;
  const P2 q1{0.0, 0.0};
  const P2 q3{c, 0.0};
  const P2 q2{along, std::sqrt(off2)};

  auto dist = [](const P2& a, const P2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); };
  const double diameter = std::max({dist(q1, q2), dist(q2, q3), c});

  P2 center{(q1[0] + q2[0] + q3[0]) / 3.0, (q1[1] + q2[1] + q3[1]) / 3.0};
  double half = opt.extent * diameter;
  double best = std::numeric_limits<double>::infinity();
  P2 best_center = center;

  for (int round = 0; round <= opt.refinements; ++round) {
    const double step = 2.0 * half / (opt.grid - 1);
    for (int i = 0; i < opt.grid; ++i) {
      for (int j = 0; j < opt.grid; ++j) {
        const P2 q{center[0] - half + i * step, center[1] - half + j * step};
        const double r = std::max(dist(q, q1), dist(q, q3));
        if (dist(q, q2) > r && r < best) {
          best = r;
          best_center = q;
        }
      }
    }
    if (!std::isfinite(best)) return Degree::infinity();
    center = best_center;
    half = opt.zoom_cells * step;
  }
  return Degree(best);
}

}  // namespace monochain
